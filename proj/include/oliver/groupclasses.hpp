#ifndef OLIVER_GROUPCLASSES_HPP
#define OLIVER_GROUPCLASSES_HPP

#include <optional>
#include <utility>
#include <vector>

#include "oliver/group.hpp"
#include "oliver/lattice.hpp"

namespace oliver {

/// Order type of a subgroup: trivial groups count as p-groups for every prime.
struct PrimaryKind {
  bool trivial = false;                // order 1
  std::optional<long long> prime;      // order = prime^k, k >= 1
  bool is_primary() const { return trivial || prime.has_value(); }
};

PrimaryKind primary_kind(long long order);

/// Per-subgroup-class predicates used by the exclusion strategies.
struct ClassTags {
  bool cyclic = false;
  PrimaryKind primary;
  /// Primes p dividing |G| admitting a normal p-subgroup (trivial allowed)
  /// with cyclic quotient. For cyclic subjects every prime qualifies and the
  /// recorded set is all primes dividing |G|.
  std::vector<long long> mod_p_cyclic_primes;
  /// Witnessed (p, q) pairs for chains P normal in H' normal in H with P a
  /// p-group, H/H' a q-group and H'/P cyclic; degenerate (trivial) links
  /// record every prime dividing |G|.
  std::vector<std::pair<long long, long long>> gpq_pairs;

  bool mod_p_cyclic() const { return cyclic || !mod_p_cyclic_primes.empty(); }

  /// Membership in the union of the chain families over all prime pairs.
  bool in_chain_family() const { return cyclic || !gpq_pairs.empty(); }
};

std::vector<ClassTags> tag_classes(const Group& G, const SubgroupLattice& lattice,
                                   bool parallel = true);

/// False iff some chain P normal in H normal in G has prime-power (or
/// trivial) |P| and |G/H| with H/P cyclic.
bool is_oliver(const Group& G, const SubgroupLattice& lattice);

}  // namespace oliver

#endif
