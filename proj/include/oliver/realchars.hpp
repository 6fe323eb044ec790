#ifndef OLIVER_REALCHARS_HPP
#define OLIVER_REALCHARS_HPP

#include <span>
#include <string>
#include <vector>

#include "oliver/chartable.hpp"
#include "oliver/group.hpp"
#include "oliver/index_set.hpp"

namespace oliver {

/// Character of an irreducible real representation, produced from the complex
/// table by the Frobenius-Schur indicator: keep real rows, pair conjugate
/// rows, double quaternionic rows.
struct RealCharacter {
  std::string label;              // X<degree> or X<degree>_<k>; "1" for trivial
  long long degree = 0;
  std::vector<Cyc> values;        // one per conjugacy class, all real
  bool trivial = false;
  std::vector<int> complex_rows;  // provenance into the complex table
  int indicator = 0;              // the indicator of the source row(s)
};

std::vector<RealCharacter> realify(const CharacterTable& t, const Group& G);

/// {g : X(g) = X(1)} for a character X given by class values.
IndexSet character_kernel(std::span<const Cyc> class_values, const Group& G);

/// All multisets over the distinct degree values summing to n.
std::vector<std::vector<long long>> partitions(long long n,
                                               const std::vector<long long>& degrees);

/// Multiset of nontrivial real irreducibles summing to dimension n.
struct CandidateModule {
  std::vector<int> summands;  // indices into the realified list, ascending
  long long total_degree = 0;
  std::vector<Cyc> values;    // pointwise sum
  std::string label;          // "X2+X4"
};

/// All faithful trivial-free candidates of total degree n, in deterministic
/// order (lexicographic on summand index sequences).
std::vector<CandidateModule> enumerate_candidates(const Group& G,
                                                  const std::vector<RealCharacter>& reals,
                                                  long long n);

/// Intersection of all index-2 subgroups, computed as the subgroup generated
/// by all squares; the whole group when no index-2 subgroup exists.
IndexSet morimoto_kernel(const Group& G);

/// True iff the candidate's fixed dimension on the index-2 kernel is zero,
/// i.e. the candidate survives the filter.
bool morimoto_filter(const CandidateModule& candidate, const IndexSet& kernel,
                     const Group& G);

}  // namespace oliver

#endif
