#ifndef OLIVER_FIXEDDIM_HPP
#define OLIVER_FIXEDDIM_HPP

#include <span>
#include <string>
#include <vector>

#include "oliver/group.hpp"
#include "oliver/index_set.hpp"
#include "oliver/lattice.hpp"
#include "oliver/realchars.hpp"

namespace oliver {

/// Dimension of the subspace fixed by H in a real module with character X:
/// (1/|H|) sum over H of X(h), evaluated exactly. Throws std::logic_error if
/// the average is not a nonnegative integer.
long long fixed_dim(std::span<const Cyc> class_values, const IndexSet& subgroup,
                    const Group& G);

/// Rows = real characters, columns = subgroup classes (evaluated on class
/// representatives; conjugation invariance is spot-checked on one extra
/// conjugate per class).
struct FixedDimTable {
  std::vector<std::string> row_labels;
  std::vector<std::string> column_labels;
  std::vector<std::vector<long long>> entries;
};

FixedDimTable fixed_dim_table(const Group& G, const std::vector<RealCharacter>& reals,
                              const SubgroupLattice& lattice, bool parallel = true);

/// Fixed dimension of a candidate's summed character; asserts additivity over
/// the summands.
long long fixed_dim_sum_check(const CandidateModule& candidate,
                              const std::vector<RealCharacter>& reals,
                              const IndexSet& subgroup, const Group& G);

/// Per-class member counts of a subgroup (class fusion), the fast evaluation
/// path for repeated fixed-dimension queries.
std::vector<long long> class_fusion_counts(const IndexSet& subgroup, const Group& G);

/// Fixed dimension from precomputed fusion counts.
long long fixed_dim_from_counts(std::span<const Cyc> class_values,
                                std::span<const long long> counts, long long subgroup_order,
                                const Group& G);

}  // namespace oliver

#endif
