#include "oliver/fixeddim.hpp"

#include <atomic>
#include <stdexcept>

#include "oliver/parallel.hpp"

namespace oliver {

namespace {

long long integral_average(const Cyc& sum, long long subgroup_order) {
  auto v = sum.integer_value();
  if (!v || *v % subgroup_order != 0 || *v < 0)
    throw std::logic_error("fixed dimension is not a nonnegative integer");
  return *v / subgroup_order;
}

}  // namespace

long long fixed_dim(std::span<const Cyc> class_values, const IndexSet& subgroup,
                    const Group& G) {
  Cyc sum = Cyc::zero(class_values[0].field());
  for (int m : subgroup.members()) sum += class_values[G.class_of(m)];
  return integral_average(sum, subgroup.count());
}

std::vector<long long> class_fusion_counts(const IndexSet& subgroup, const Group& G) {
  std::vector<long long> counts(G.num_classes(), 0);
  for (int m : subgroup.members()) counts[G.class_of(m)]++;
  return counts;
}

long long fixed_dim_from_counts(std::span<const Cyc> class_values,
                                std::span<const long long> counts, long long subgroup_order,
                                const Group& G) {
  Cyc sum = Cyc::zero(class_values[0].field());
  for (int c = 0; c < G.num_classes(); ++c)
    if (counts[c]) sum += class_values[c].scaled(counts[c]);
  return integral_average(sum, subgroup_order);
}

FixedDimTable fixed_dim_table(const Group& G, const std::vector<RealCharacter>& reals,
                              const SubgroupLattice& lattice, bool use_parallel) {
  std::vector<int> rows;
  for (int i = 0; i < static_cast<int>(reals.size()); ++i)
    if (!reals[i].trivial) rows.push_back(i);

  FixedDimTable t;
  for (int r : rows) t.row_labels.push_back(reals[r].label);
  for (const auto& c : lattice.classes()) t.column_labels.push_back(c.label);
  t.entries.assign(rows.size(), std::vector<long long>(lattice.num_classes(), 0));

  const int nc = lattice.num_classes();
  std::vector<std::vector<long long>> counts(nc);
  std::vector<std::vector<long long>> check_counts(nc);
  for (int c = 0; c < nc; ++c) {
    const auto& cls = lattice.classes()[c];
    counts[c] = class_fusion_counts(lattice.subgroup(cls.representative).members, G);
    if (cls.conjugates.size() > 1)
      check_counts[c] =
          class_fusion_counts(lattice.subgroup(cls.conjugates.back()).members, G);
  }

  const int total = static_cast<int>(rows.size()) * nc;
  const bool par = use_parallel && parallel::enabled();
  std::atomic<bool> failed{false};
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(parallel::thread_count()) if (par)
#endif
  for (int cell = 0; cell < total; ++cell) {
    try {
      int ri = cell / nc;
      int ci = cell % nc;
      const auto& cls = lattice.classes()[ci];
      long long value =
          fixed_dim_from_counts(reals[rows[ri]].values, counts[ci], cls.order, G);
      if (!check_counts[ci].empty()) {
        long long again =
            fixed_dim_from_counts(reals[rows[ri]].values, check_counts[ci], cls.order, G);
        if (again != value) failed = true;
      }
      t.entries[ri][ci] = value;
    } catch (...) {
      failed = true;
    }
  }
  if (failed)
    throw std::logic_error("fixed dimension table failed integrality or invariance");
  return t;
}

long long fixed_dim_sum_check(const CandidateModule& candidate,
                              const std::vector<RealCharacter>& reals,
                              const IndexSet& subgroup, const Group& G) {
  long long total = fixed_dim(candidate.values, subgroup, G);
  long long by_parts = 0;
  for (int s : candidate.summands) by_parts += fixed_dim(reals[s].values, subgroup, G);
  if (total != by_parts)
    throw std::logic_error("fixed dimension is not additive over summands");
  return total;
}

}  // namespace oliver
