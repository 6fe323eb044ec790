#include "oliver/lattice.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "oliver/parallel.hpp"

namespace oliver {

namespace {

struct RawSub {
  IndexSet members;
  std::vector<int> gens;
};

RawSub close_extension(const Group& G, const Subgroup& base, int extra) {
  RawSub r;
  r.gens = base.gens;
  r.gens.push_back(extra);
  r.members = G.closure(r.gens);
  return r;
}

}  // namespace

SubgroupLattice SubgroupLattice::enumerate(const Group& G, const LatticeOptions& options) {
  const int n = static_cast<int>(G.order());

  std::vector<Subgroup> subs;
  std::unordered_map<IndexSet, int, IndexSetHash> seen;

  auto insert = [&](IndexSet members, std::vector<int> gens) -> bool {
    auto it = seen.find(members);
    if (it != seen.end()) return false;
    if (static_cast<long long>(subs.size()) >= options.max_subgroups)
      throw std::runtime_error("subgroup count exceeds limit " +
                               std::to_string(options.max_subgroups));
    Subgroup s;
    s.order = members.count();
    s.members = std::move(members);
    s.gens = std::move(gens);
    seen.emplace(s.members, static_cast<int>(subs.size()));
    subs.push_back(std::move(s));
    return true;
  };

  // Seed with all cyclic subgroups (the trivial one comes from the identity).
  for (int g = 0; g < n; ++g) {
    std::vector<int> gens{g};
    insert(G.closure(gens), std::move(gens));
  }

  // Extend every known subgroup by one outside element until stable. The
  // parallel variant works in rounds with a deterministic merge; the serial
  // reference processes one worklist entry at a time.
  std::size_t head = 0;
  const bool use_parallel = options.parallel;
  while (head < subs.size()) {
    std::size_t tail = subs.size();
    if (!use_parallel) {
      for (std::size_t i = head; i < tail; ++i) {
        for (int x = 0; x < n; ++x) {
          if (subs[i].members.test(x)) continue;
          RawSub r = close_extension(G, subs[i], x);
          insert(std::move(r.members), std::move(r.gens));
        }
      }
    } else {
      // One round at a time: candidates are produced in parallel and merged
      // in deterministic (subgroup, element) order.
      std::vector<std::vector<RawSub>> produced(tail - head);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(parallel::thread_count())
#endif
      for (std::size_t i = head; i < tail; ++i) {
        std::vector<RawSub> local;
        for (int x = 0; x < n; ++x) {
          if (subs[i].members.test(x)) continue;
          local.push_back(close_extension(G, subs[i], x));
        }
        produced[i - head] = std::move(local);
      }
      for (auto& batch : produced)
        for (auto& r : batch) insert(std::move(r.members), std::move(r.gens));
    }
    head = tail;
  }

  // Canonical order: (order, lexicographic member list).
  std::vector<int> perm(subs.size());
  for (std::size_t i = 0; i < subs.size(); ++i) perm[i] = static_cast<int>(i);
  std::sort(perm.begin(), perm.end(), [&](int a, int b) {
    if (subs[a].order != subs[b].order) return subs[a].order < subs[b].order;
    return subs[a].members.lex_less(subs[b].members);
  });

  SubgroupLattice L;
  L.group_ = &G;
  L.subgroups_.reserve(subs.size());
  for (int i : perm) L.subgroups_.push_back(std::move(subs[i]));
  for (int i = 0; i < static_cast<int>(L.subgroups_.size()); ++i)
    L.index_.emplace(L.subgroups_[i].members, i);

  // Conjugation orbits.
  L.class_of_.assign(L.subgroups_.size(), -1);
  std::vector<SubgroupClass> classes;
  for (int s = 0; s < static_cast<int>(L.subgroups_.size()); ++s) {
    if (L.class_of_[s] != -1) continue;
    int cls = static_cast<int>(classes.size());
    std::vector<int> orbit{s};
    L.class_of_[s] = cls;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (int g : G.generator_indices()) {
        IndexSet img(n);
        for (int m : L.subgroups_[orbit[i]].members.members()) img.set(G.conj(g, m));
        auto it = L.index_.find(img);
        if (it == L.index_.end())
          throw std::logic_error("conjugate of a subgroup missing from lattice");
        if (L.class_of_[it->second] == -1) {
          L.class_of_[it->second] = cls;
          orbit.push_back(it->second);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    SubgroupClass c;
    c.order = L.subgroups_[orbit[0]].order;
    c.representative = orbit[0];
    c.is_normal = orbit.size() == 1;
    c.conjugates = std::move(orbit);
    classes.push_back(std::move(c));
  }

  // Classes already sort correctly by (order, minimal member list) because
  // subgroup indices are canonical.
  std::sort(classes.begin(), classes.end(), [](const SubgroupClass& a, const SubgroupClass& b) {
    if (a.order != b.order) return a.order < b.order;
    return a.representative < b.representative;
  });
  std::map<long long, int> order_count;
  for (const auto& c : classes) order_count[c.order]++;
  std::map<long long, int> order_seen;
  for (int i = 0; i < static_cast<int>(classes.size()); ++i) {
    classes[i].id = i;
    int k = ++order_seen[classes[i].order];
    classes[i].label = "d" + std::to_string(classes[i].order);
    if (order_count[classes[i].order] > 1) classes[i].label += "_" + std::to_string(k);
    for (int s : classes[i].conjugates) L.class_of_[s] = i;
  }
  L.classes_ = std::move(classes);

  L.trivial_index_ = 0;
  L.full_index_ = static_cast<int>(L.subgroups_.size()) - 1;
  return L;
}

std::optional<int> SubgroupLattice::find(const IndexSet& members) const {
  auto it = index_.find(members);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int SubgroupLattice::intersect(int a, int b) const {
  IndexSet meet = subgroups_[a].members & subgroups_[b].members;
  auto idx = find(meet);
  if (!idx) throw std::logic_error("intersection missing from complete lattice");
  return *idx;
}

std::vector<int> SubgroupLattice::subgroups_of(int h) const {
  std::vector<int> out;
  const IndexSet& big = subgroups_[h].members;
  for (int s = 0; s < static_cast<int>(subgroups_.size()); ++s)
    if (subgroups_[s].order <= subgroups_[h].order && subgroups_[s].members.subset_of(big))
      out.push_back(s);
  return out;
}

bool SubgroupLattice::is_normal_in(int p, int h) const {
  const Group& G = *group_;
  if (!subgroups_[p].members.subset_of(subgroups_[h].members))
    throw std::invalid_argument("normality test requires P <= H");
  const auto members = subgroups_[p].members.members();
  for (int g : subgroups_[h].gens)
    for (int m : members)
      if (!subgroups_[p].members.test(G.conj(g, m))) return false;
  return true;
}

bool SubgroupLattice::quotient_is_cyclic(int h, int p) const {
  const Group& G = *group_;
  if (!is_normal_in(p, h))
    throw std::invalid_argument("cyclic-quotient test requires P normal in H");
  const long long quotient_order = subgroups_[h].order / subgroups_[p].order;
  if (quotient_order == 1) return true;
  const IndexSet& pm = subgroups_[p].members;
  for (int x : subgroups_[h].members.members()) {
    long long m = 1;
    int cur = x;
    while (!pm.test(cur)) {
      cur = G.mul(cur, x);
      ++m;
    }
    if (m == quotient_order) return true;
  }
  return false;
}

std::vector<int> SubgroupLattice::normal_classes() const {
  std::vector<int> out;
  for (const auto& c : classes_)
    if (c.is_normal) out.push_back(c.id);
  return out;
}

}  // namespace oliver
