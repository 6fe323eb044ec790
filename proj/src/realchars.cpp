#include "oliver/realchars.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace oliver {

std::vector<RealCharacter> realify(const CharacterTable& t, const Group& G) {
  const int k = t.num_irreducibles();
  std::vector<int> indicator(k);
  for (int i = 0; i < k; ++i) indicator[i] = frobenius_schur(t, i, G);

  std::vector<char> consumed(k, 0);
  std::vector<RealCharacter> reals;
  for (int i = 0; i < k; ++i) {
    if (consumed[i]) continue;
    RealCharacter r;
    r.indicator = indicator[i];
    if (indicator[i] == 1) {
      r.values = t.rows[i];
      r.degree = t.degrees[i];
      r.complex_rows = {i};
    } else if (indicator[i] == -1) {
      r.values.reserve(k);
      for (const Cyc& v : t.rows[i]) r.values.push_back(v.scaled(2));
      r.degree = 2 * t.degrees[i];
      r.complex_rows = {i};
    } else {
      // pair with the conjugate row
      int partner = -1;
      for (int j = i + 1; j < k && partner == -1; ++j) {
        if (consumed[j] || t.degrees[j] != t.degrees[i]) continue;
        bool conj_match = true;
        for (int c = 0; c < G.num_classes() && conj_match; ++c)
          if (!(t.rows[j][c] == t.rows[i][c].conj())) conj_match = false;
        if (conj_match) partner = j;
      }
      if (partner == -1)
        throw std::logic_error("indicator-zero character without conjugate partner");
      consumed[partner] = 1;
      r.values.reserve(k);
      for (int c = 0; c < G.num_classes(); ++c)
        r.values.push_back(t.rows[i][c] + t.rows[partner][c]);
      r.degree = 2 * t.degrees[i];
      r.complex_rows = {i, partner};
    }
    consumed[i] = 1;
    for (const Cyc& v : r.values)
      if (!v.is_real()) throw std::logic_error("realified character value is not real");
    r.trivial = true;
    for (const Cyc& v : r.values)
      if (!(v.integer_value() == 1)) {
        r.trivial = false;
        break;
      }
    reals.push_back(std::move(r));
  }

  std::sort(reals.begin(), reals.end(), [](const RealCharacter& a, const RealCharacter& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    return lex_less(a.values, b.values);
  });

  // Labels over the nontrivial characters: X<d>, with _k to break degree ties.
  std::map<long long, int> tie_count, tie_seen;
  for (const auto& r : reals)
    if (!r.trivial) tie_count[r.degree]++;
  for (auto& r : reals) {
    if (r.trivial) {
      r.label = "1";
      continue;
    }
    int k2 = ++tie_seen[r.degree];
    r.label = "X" + std::to_string(r.degree);
    if (tie_count[r.degree] > 1) r.label += "_" + std::to_string(k2);
  }
  return reals;
}

IndexSet character_kernel(std::span<const Cyc> class_values, const Group& G) {
  IndexSet kernel(static_cast<int>(G.order()));
  const Cyc& at_identity = class_values[0];
  for (int c = 0; c < G.num_classes(); ++c) {
    if (class_values[c] == at_identity)
      for (int m : G.classes()[c].members) kernel.set(m);
  }
  return kernel;
}

std::vector<std::vector<long long>> partitions(long long n,
                                               const std::vector<long long>& degrees) {
  std::vector<long long> distinct = degrees;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

  std::vector<std::vector<long long>> out;
  std::vector<long long> current;
  auto rec = [&](auto&& self, long long remaining, std::size_t from) -> void {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (std::size_t i = from; i < distinct.size(); ++i) {
      if (distinct[i] > remaining) break;
      current.push_back(distinct[i]);
      self(self, remaining - distinct[i], i);
      current.pop_back();
    }
  };
  rec(rec, n, 0);

  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

std::vector<CandidateModule> enumerate_candidates(const Group& G,
                                                  const std::vector<RealCharacter>& reals,
                                                  long long n) {
  std::vector<int> usable;
  for (int i = 0; i < static_cast<int>(reals.size()); ++i)
    if (!reals[i].trivial) usable.push_back(i);

  std::vector<CandidateModule> out;
  std::vector<int> current;
  auto rec = [&](auto&& self, long long remaining, std::size_t from) -> void {
    if (remaining == 0) {
      CandidateModule cand;
      cand.summands = current;
      cand.total_degree = n;
      cand.values.assign(G.num_classes(), Cyc::zero(reals[0].values[0].field()));
      for (int s : current)
        for (int c = 0; c < G.num_classes(); ++c) cand.values[c] += reals[s].values[c];
      if (character_kernel(cand.values, G).count() != 1) return;  // not faithful
      for (std::size_t i = 0; i < current.size(); ++i)
        cand.label += (i ? "+" : "") + reals[current[i]].label;
      out.push_back(std::move(cand));
      return;
    }
    for (std::size_t i = from; i < usable.size(); ++i) {
      if (reals[usable[i]].degree > remaining) continue;
      current.push_back(usable[i]);
      self(self, remaining - reals[usable[i]].degree, i);
      current.pop_back();
    }
  };
  if (!reals.empty()) rec(rec, n, 0);
  return out;
}

IndexSet morimoto_kernel(const Group& G) { return G.square_closure(); }

bool morimoto_filter(const CandidateModule& candidate, const IndexSet& kernel,
                     const Group& G) {
  Cyc sum = Cyc::zero(candidate.values[0].field());
  for (int m : kernel.members()) sum += candidate.values[G.class_of(m)];
  auto v = sum.integer_value();
  if (!v || *v % kernel.count() != 0 || *v < 0)
    throw std::logic_error("fixed dimension on the index-2 kernel is not integral");
  return *v == 0;
}

}  // namespace oliver
