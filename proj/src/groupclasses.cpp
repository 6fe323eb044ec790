#include "oliver/groupclasses.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>

#include "oliver/parallel.hpp"

namespace oliver {

namespace {

std::vector<long long> primes_dividing(long long n) {
  std::vector<long long> out;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool subgroup_is_cyclic(const Group& G, const Subgroup& s) {
  for (int m : s.members.members())
    if (G.element_order(m) == s.order) return true;
  return false;
}

}  // namespace

PrimaryKind primary_kind(long long order) {
  PrimaryKind k;
  if (order == 1) {
    k.trivial = true;
    return k;
  }
  auto ps = primes_dividing(order);
  if (ps.size() == 1) k.prime = ps[0];
  return k;
}

std::vector<ClassTags> tag_classes(const Group& G, const SubgroupLattice& lattice,
                                   bool use_parallel) {
  const auto ambient_primes = primes_dividing(G.order());
  const int nc = lattice.num_classes();
  std::vector<ClassTags> tags(nc);

  const bool par = use_parallel && parallel::enabled();
  std::atomic<bool> failed{false};
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(parallel::thread_count()) if (par)
#endif
  for (int c = 0; c < nc; ++c) {
    try {
      const int h = lattice.classes()[c].representative;
      ClassTags& tag = tags[c];
      tag.primary = primary_kind(lattice.subgroup(h).order);
      tag.cyclic = subgroup_is_cyclic(G, lattice.subgroup(h));

      const auto subs = lattice.subgroups_of(h);

      // Primes for which links P normal-in-S with S/P cyclic exist; trivial P
      // witnesses every ambient prime.
      std::set<long long> mpc;
      std::map<std::pair<int, int>, bool> cyclic_memo;
      auto chain_link = [&](int big, int small) {
        auto key = std::make_pair(big, small);
        auto it = cyclic_memo.find(key);
        if (it != cyclic_memo.end()) return it->second;
        bool ok = lattice.is_normal_in(small, big) && lattice.quotient_is_cyclic(big, small);
        cyclic_memo.emplace(key, ok);
        return ok;
      };

      for (int p_sub : subs) {
        PrimaryKind pk = primary_kind(lattice.subgroup(p_sub).order);
        if (!pk.is_primary()) continue;
        if (!chain_link(h, p_sub)) continue;
        if (pk.trivial)
          mpc.insert(ambient_primes.begin(), ambient_primes.end());
        else
          mpc.insert(*pk.prime);
      }
      tag.mod_p_cyclic_primes.assign(mpc.begin(), mpc.end());

      // Chains P normal in H' normal in H with H/H' a q-group, H'/P cyclic.
      std::set<std::pair<long long, long long>> pairs;
      for (int mid : subs) {
        if (!lattice.is_normal_in(mid, h)) continue;
        long long index = lattice.subgroup(h).order / lattice.subgroup(mid).order;
        PrimaryKind qk = primary_kind(index);
        if (!qk.is_primary()) continue;
        std::vector<long long> qset =
            qk.trivial ? ambient_primes : std::vector<long long>{*qk.prime};
        for (int p_sub : lattice.subgroups_of(mid)) {
          PrimaryKind pk = primary_kind(lattice.subgroup(p_sub).order);
          if (!pk.is_primary()) continue;
          if (!chain_link(mid, p_sub)) continue;
          std::vector<long long> pset =
              pk.trivial ? ambient_primes : std::vector<long long>{*pk.prime};
          for (long long p : pset)
            for (long long q : qset) pairs.emplace(p, q);
        }
      }
      tag.gpq_pairs.assign(pairs.begin(), pairs.end());
    } catch (...) {
      failed = true;
    }
  }
  if (failed) throw std::logic_error("class tagging failed");
  return tags;
}

bool is_oliver(const Group& G, const SubgroupLattice& lattice) {
  for (int c : lattice.normal_classes()) {
    const int h = lattice.classes()[c].representative;
    long long index = G.order() / lattice.subgroup(h).order;
    if (!primary_kind(index).is_primary()) continue;
    for (int p_sub : lattice.subgroups_of(h)) {
      if (!primary_kind(lattice.subgroup(p_sub).order).is_primary()) continue;
      if (!lattice.is_normal_in(p_sub, h)) continue;
      if (lattice.quotient_is_cyclic(h, p_sub)) return false;
    }
  }
  return true;
}

}  // namespace oliver
