#include "oliver/verify.hpp"

#include <algorithm>
#include <set>

#include "oliver/chartable.hpp"
#include "oliver/realchars.hpp"
#include "oliver/report.hpp"

namespace oliver {

namespace {

struct Failure {
  std::string reason;
};

#define V_REQUIRE(cond, msg)            \
  do {                                  \
    if (!(cond)) throw Failure{(msg)};  \
  } while (0)

IndexSet to_set(const Group& G, const std::vector<int>& members, const std::string& what) {
  IndexSet s(static_cast<int>(G.order()));
  for (int m : members) {
    V_REQUIRE(m >= 0 && m < G.order(), what + ": element index out of range");
    V_REQUIRE(!s.test(m), what + ": duplicate element index");
    s.set(m);
  }
  return s;
}

// Direct closure test: identity present and products stay inside.
void require_subgroup(const Group& G, const IndexSet& s, const std::string& what) {
  V_REQUIRE(s.test(G.identity()), what + ": missing identity");
  const auto members = s.members();
  for (int a : members)
    for (int b : members)
      V_REQUIRE(s.test(G.mul(a, b)), what + ": not closed under products");
}

long long direct_fixed_dim(const Group& G, const std::vector<Cyc>& values,
                           const IndexSet& subgroup, const std::string& what) {
  Cyc sum = Cyc::zero(values[0].field());
  for (int m : subgroup.members()) sum += values[G.class_of(m)];
  auto v = sum.integer_value();
  V_REQUIRE(v.has_value(), what + ": fixed dimension is irrational");
  V_REQUIRE(*v >= 0 && *v % subgroup.count() == 0,
            what + ": fixed dimension is not a nonnegative integer");
  return *v / subgroup.count();
}

bool is_prime_power_or_trivial(long long n, long long* prime_out = nullptr) {
  if (n == 1) return true;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      while (n % d == 0) n /= d;
      if (prime_out) *prime_out = d;
      return n == 1;
    }
  }
  if (prime_out) *prime_out = n;
  return true;
}

void require_generates(const Group& G, const IndexSet& h1, const IndexSet& h2,
                       const std::string& what) {
  IndexSet seed = h1 | h2;
  V_REQUIRE(G.closure(seed).count() == G.order(), what + ": H1 and H2 do not generate G");
}

void require_normal(const Group& G, const IndexSet& small, const IndexSet& big,
                    const std::string& what) {
  for (int g : big.members())
    for (int m : small.members())
      V_REQUIRE(small.test(G.conj(g, m)), what + ": normality fails");
}

// Chain membership witness: P normal in H' normal in H, |P| and |H|/|H'|
// prime powers (or 1), H'/P cyclic via the recorded coset generator.
void check_chain_witness(const Group& G, const nlohmann::json& w, const IndexSet& h,
                         const std::string& what) {
  V_REQUIRE(w.contains("mid") && w.contains("normal_subgroup") &&
                w.contains("coset_generator"),
            what + ": malformed witness");
  IndexSet mid = to_set(G, w["mid"].get<std::vector<int>>(), what);
  IndexSet sub = to_set(G, w["normal_subgroup"].get<std::vector<int>>(), what);
  require_subgroup(G, mid, what + " witness mid subgroup");
  require_subgroup(G, sub, what + " witness normal subgroup");
  V_REQUIRE(mid.subset_of(h), what + ": witness mid subgroup not inside H");
  V_REQUIRE(sub.subset_of(mid), what + ": witness normal subgroup not inside mid");
  V_REQUIRE(h.count() % mid.count() == 0 &&
                is_prime_power_or_trivial(h.count() / mid.count()),
            what + ": index of the mid subgroup is not a prime power");
  V_REQUIRE(is_prime_power_or_trivial(sub.count()),
            what + ": witness subgroup order is not a prime power");
  require_normal(G, mid, h, what + " witness mid");
  require_normal(G, sub, mid, what + " witness normal");
  int c = w["coset_generator"].get<int>();
  V_REQUIRE(c >= 0 && c < G.order() && mid.test(c), what + ": coset generator not in mid");
  IndexSet gen_seed = sub;
  gen_seed.set(c);
  V_REQUIRE(G.closure(gen_seed) == mid,
            what + ": witness does not generate a cyclic quotient");
}

// Independent candidate enumeration: multisets of nontrivial real characters
// summing to n, kept when the kernel is trivial by direct evaluation.
std::vector<std::vector<int>> enumerate_expected_candidates(
    const Group& G, const std::vector<RealCharacter>& reals, long long n) {
  std::vector<int> usable;
  for (int i = 0; i < static_cast<int>(reals.size()); ++i)
    if (!reals[i].trivial) usable.push_back(i);
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto kernel_trivial = [&](const std::vector<int>& summands) {
    std::vector<Cyc> vals(G.num_classes(), Cyc::zero(reals[0].values[0].field()));
    for (int s : summands)
      for (int c = 0; c < G.num_classes(); ++c) vals[c] += reals[s].values[c];
    for (int c = 1; c < G.num_classes(); ++c)
      if (vals[c] == vals[0]) return false;
    return true;
  };
  auto rec = [&](auto&& self, long long remaining, std::size_t from) -> void {
    if (remaining == 0) {
      if (kernel_trivial(cur)) out.push_back(cur);
      return;
    }
    for (std::size_t i = from; i < usable.size(); ++i) {
      if (reals[usable[i]].degree > remaining) continue;
      cur.push_back(usable[i]);
      self(self, remaining - reals[usable[i]].degree, i);
      cur.pop_back();
    }
  };
  if (!reals.empty()) rec(rec, n, 0);
  return out;
}

void verify_impl(const Group& G, const nlohmann::json& report) {
  V_REQUIRE(report.contains("group") && report.contains("n") && report.contains("verdict") &&
                report.contains("candidates"),
            "report: missing required fields");
  V_REQUIRE(report["order"].get<long long>() == G.order(), "report: group order mismatch");
  V_REQUIRE(report["degree"].get<int>() == G.degree(), "report: group degree mismatch");
  const long long n = report["n"].get<long long>();
  V_REQUIRE(n >= 1, "report: dimension must be positive");

  // Fresh character data; the only shared machinery is character evaluation.
  CharacterTable table = compute_character_table(G);
  V_REQUIRE(verify_orthogonality(table, G), "recomputed table fails orthogonality");
  V_REQUIRE(!report.contains("table_digest") ||
                report["table_digest"].get<std::string>() == table_digest(table),
            "report: character table digest mismatch");
  std::vector<RealCharacter> reals = realify(table, G);

  // Index-2 kernel, recomputed directly from squares.
  IndexSet kernel = G.square_closure();
  if (report.contains("morimoto_kernel")) {
    IndexSet claimed = to_set(G, report["morimoto_kernel"].get<std::vector<int>>(),
                              "morimoto_kernel");
    V_REQUIRE(claimed == kernel, "report: index-2 kernel mismatch");
  }

  const bool morimoto_on =
      !report.contains("options") || report["options"].value("morimoto", true);

  bool any_unresolved = false;
  std::vector<std::vector<int>> listed_summands;

  for (const auto& c : report["candidates"]) {
    const std::string label = c.value("label", "?");
    const std::string what = "candidate " + label;

    auto summands = c["summands"].get<std::vector<int>>();
    V_REQUIRE(!summands.empty(), what + ": empty summand list");
    V_REQUIRE(std::is_sorted(summands.begin(), summands.end()),
              what + ": summands not in canonical order");
    std::vector<Cyc> values(G.num_classes(), Cyc::zero(table.field));
    long long total = 0;
    for (int s : summands) {
      V_REQUIRE(s >= 0 && s < static_cast<int>(reals.size()), what + ": bad summand index");
      V_REQUIRE(!reals[s].trivial, what + ": trivial summand");
      total += reals[s].degree;
      for (int cl = 0; cl < G.num_classes(); ++cl) values[cl] += reals[s].values[cl];
    }
    V_REQUIRE(total == n, what + ": degrees do not sum to the dimension");
    for (int cl = 1; cl < G.num_classes(); ++cl)
      V_REQUIRE(!(values[cl] == values[0]), what + ": character is not faithful");
    V_REQUIRE(c.value("values_digest", "") == values_digest(values),
              what + ": values digest mismatch");
    listed_summands.push_back(summands);

    const std::string outcome = c.value("outcome", "");
    if (outcome == "UNRESOLVED") {
      any_unresolved = true;
      continue;
    }
    if (outcome == "MORIMOTO_EXCLUDED") {
      V_REQUIRE(morimoto_on, what + ": filter exclusion with the filter disabled");
      long long dim = direct_fixed_dim(G, values, kernel, what);
      V_REQUIRE(dim != 0, what + ": kernel fixed dimension is zero, filter cannot apply");
      V_REQUIRE(!c.contains("morimoto_fixed_dim") ||
                    c["morimoto_fixed_dim"].get<long long>() == dim,
                what + ": recorded kernel dimension mismatch");
      continue;
    }
    V_REQUIRE(outcome == "CERTIFIED", what + ": unknown outcome");
    V_REQUIRE(c.contains("certificate"), what + ": certified without certificate");
    const auto& cert = c["certificate"];

    IndexSet h1 = to_set(G, cert["h1"].get<std::vector<int>>(), what + " H1");
    IndexSet h2 = to_set(G, cert["h2"].get<std::vector<int>>(), what + " H2");
    IndexSet p = to_set(G, cert["p"].get<std::vector<int>>(), what + " P");
    require_subgroup(G, h1, what + " H1");
    require_subgroup(G, h2, what + " H2");
    require_subgroup(G, p, what + " P");
    V_REQUIRE(p.subset_of(h1 & h2), what + ": P not inside the intersection");
    require_generates(G, h1, h2, what);

    long long d1 = direct_fixed_dim(G, values, h1, what + " H1");
    long long d2 = direct_fixed_dim(G, values, h2, what + " H2");
    long long dp = direct_fixed_dim(G, values, p, what + " P");
    V_REQUIRE(cert["dim_h1"].get<long long>() == d1, what + ": recorded H1 dimension wrong");
    V_REQUIRE(cert["dim_h2"].get<long long>() == d2, what + ": recorded H2 dimension wrong");
    V_REQUIRE(cert["dim_p"].get<long long>() == dp, what + ": recorded P dimension wrong");

    const int strategy = cert["strategy"].get<int>();
    if (strategy == 1) {
      long long prime = 0;
      V_REQUIRE(p.count() > 1 && is_prime_power_or_trivial(p.count(), &prime),
                what + ": P is not a nontrivial primary subgroup");
      V_REQUIRE(!cert.contains("p_prime") || cert["p_prime"].get<long long>() == prime,
                what + ": recorded prime mismatch");
      check_chain_witness(G, cert["h1_witness"], h1, what + " H1");
      check_chain_witness(G, cert["h2_witness"], h2, what + " H2");
      V_REQUIRE(dp == 0, what + ": discrete restriction needs zero fixed dimension on P");
    } else if (strategy == 2) {
      V_REQUIRE(is_prime_power_or_trivial(p.count()), what + ": P is not a p-group");
      const std::string parity = cert.value("parity", "");
      if (parity == "odd_orders") {
        V_REQUIRE(h1.count() % 2 == 1 && h2.count() % 2 == 1,
                  what + ": orders are not both odd");
      } else if (parity == "normal_odd_quotients") {
        require_normal(G, p, h1, what + " P in H1");
        require_normal(G, p, h2, what + " P in H2");
        V_REQUIRE((h1.count() / p.count()) % 2 == 1 && (h2.count() / p.count()) % 2 == 1,
                  what + ": quotient orders are not both odd");
      } else {
        throw Failure{what + ": unknown parity case"};
      }
      V_REQUIRE(d1 > 0, what + ": H1 fixed dimension must be positive");
      V_REQUIRE(d2 > 0, what + ": H2 fixed dimension must be positive");
      V_REQUIRE(d1 + d2 == dp, what + ": dimension condition fails");
    } else {
      throw Failure{what + ": unknown strategy"};
    }
  }

  // Completeness: the candidate list must be exactly the faithful multisets.
  auto expected = enumerate_expected_candidates(G, reals, n);
  std::sort(listed_summands.begin(), listed_summands.end());
  std::sort(expected.begin(), expected.end());
  V_REQUIRE(listed_summands == expected,
            "report: candidate list does not match the faithful candidate set");

  const bool excluded = report["verdict"].get<std::string>() == "EXCLUDED";
  V_REQUIRE(excluded == !any_unresolved, "report: verdict inconsistent with outcomes");
}

}  // namespace

bool verify_report(const Group& G, const nlohmann::json& report, std::string* diagnostics) {
  try {
    verify_impl(G, report);
    return true;
  } catch (const Failure& f) {
    if (diagnostics) *diagnostics = f.reason;
    return false;
  } catch (const std::exception& e) {
    if (diagnostics) *diagnostics = std::string("malformed report: ") + e.what();
    return false;
  }
}

}  // namespace oliver
