#ifndef OLIVER_LATTICE_HPP
#define OLIVER_LATTICE_HPP

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "oliver/group.hpp"
#include "oliver/index_set.hpp"

namespace oliver {

struct Subgroup {
  IndexSet members;
  long long order = 0;
  std::vector<int> gens;  // small generating set, element indices
};

struct SubgroupClass {
  int id = 0;
  std::string label;           // d<order> or d<order>_<k>
  long long order = 0;
  int representative = 0;      // subgroup index of the minimal conjugate
  std::vector<int> conjugates; // subgroup indices, ascending
  bool is_normal = false;
};

struct LatticeOptions {
  long long max_subgroups = 100000;
  bool parallel = true;
};

/// Every subgroup of G, classified up to conjugacy. Enumeration starts from
/// the cyclic subgroups and extends each known subgroup by one outside
/// element until a fixpoint; every subgroup arises through such a chain.
class SubgroupLattice {
public:
  static SubgroupLattice enumerate(const Group& G, const LatticeOptions& options = {});

  const Group& group() const { return *group_; }
  const std::vector<Subgroup>& subgroups() const { return subgroups_; }
  const std::vector<SubgroupClass>& classes() const { return classes_; }
  const Subgroup& subgroup(int i) const { return subgroups_[i]; }
  int num_subgroups() const { return static_cast<int>(subgroups_.size()); }
  int num_classes() const { return static_cast<int>(classes_.size()); }

  int class_of(int subgroup_index) const { return class_of_[subgroup_index]; }
  std::optional<int> find(const IndexSet& members) const;

  /// Index of A ∩ B; always present since the lattice is complete.
  int intersect(int a, int b) const;

  /// Indices of all subgroups contained in the given one, ascending.
  std::vector<int> subgroups_of(int h) const;

  /// True iff h p h^-1 = p for every h in H (checked on H's generators).
  bool is_normal_in(int p, int h) const;

  /// Precondition p normal in h: true iff some coset generates H/P.
  bool quotient_is_cyclic(int h, int p) const;

  std::vector<int> normal_classes() const;

  int trivial_subgroup() const { return trivial_index_; }
  int full_subgroup() const { return full_index_; }

private:
  const Group* group_ = nullptr;
  std::vector<Subgroup> subgroups_;
  std::vector<SubgroupClass> classes_;
  std::vector<int> class_of_;
  std::unordered_map<IndexSet, int, IndexSetHash> index_;
  int trivial_index_ = 0;
  int full_index_ = 0;
};

}  // namespace oliver

#endif
