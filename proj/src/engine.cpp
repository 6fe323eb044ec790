#include "oliver/engine.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>

#include "oliver/parallel.hpp"
#include "oliver/report.hpp"

namespace oliver {

namespace {

/// Finds a chain witness P normal in H' normal in H with prime-power (or
/// trivial) |P| and |H|/|H'|, H'/P cyclic. Deterministic: smallest qualifying
/// H' index, then smallest P index, then smallest coset element.
std::optional<GpqWitness> find_chain_witness(const SubgroupLattice& lattice,
                                             const Group& G, int h) {
  const Subgroup& H = lattice.subgroup(h);
  for (int mid : lattice.subgroups_of(h)) {
    const Subgroup& M = lattice.subgroup(mid);
    if (!primary_kind(H.order / M.order).is_primary()) continue;
    if (!lattice.is_normal_in(mid, h)) continue;
    for (int s : lattice.subgroups_of(mid)) {
      if (!primary_kind(lattice.subgroup(s).order).is_primary()) continue;
      if (!lattice.is_normal_in(s, mid)) continue;
      const long long quotient = M.order / lattice.subgroup(s).order;
      const IndexSet& pm = lattice.subgroup(s).members;
      for (int x : M.members.members()) {
        long long m = 1;
        int cur = x;
        while (!pm.test(cur)) {
          cur = G.mul(cur, x);
          ++m;
        }
        if (m == quotient) {
          GpqWitness w;
          w.mid_members = M.members.members();
          w.normal_members = pm.members();
          w.coset_generator = x;
          return w;
        }
      }
    }
  }
  return std::nullopt;
}

bool generates_group(const Group& G, const SubgroupLattice& lattice, int h1, int h2) {
  std::vector<int> seed = lattice.subgroup(h1).gens;
  const auto& g2 = lattice.subgroup(h2).gens;
  seed.insert(seed.end(), g2.begin(), g2.end());
  return G.closure(seed).count() == G.order();
}

}  // namespace

TripleStreams good_triples(const Group& G, const SubgroupLattice& lattice,
                           const std::vector<ClassTags>& tags, StrategyFilter filter,
                           bool use_parallel) {
  const int nc = lattice.num_classes();
  std::vector<TripleStreams> per_class(nc);

  const bool par = use_parallel && parallel::enabled();
  std::atomic<bool> failed{false};
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(parallel::thread_count()) if (par)
#endif
  for (int c = 0; c < nc; ++c) {
    try {
      TripleStreams& out = per_class[c];
      const int h1 = lattice.classes()[c].representative;
      std::optional<GpqWitness> h1_witness;
      if (filter != StrategyFilter::only2 && tags[c].in_chain_family())
        h1_witness = find_chain_witness(lattice, G, h1);

      for (int h2 = 0; h2 < lattice.num_subgroups(); ++h2) {
        const int h2_class = lattice.class_of(h2);
        const bool want_s1 = filter != StrategyFilter::only2 && h1_witness &&
                             tags[h2_class].in_chain_family();
        const bool want_s2 = filter != StrategyFilter::only1;
        if (!want_s1 && !want_s2) continue;
        if (!generates_group(G, lattice, h1, h2)) continue;

        const int meet = lattice.intersect(h1, h2);
        std::optional<GpqWitness> h2_witness;
        if (want_s1) {
          h2_witness = find_chain_witness(lattice, G, h2);
          if (!h2_witness)
            throw std::logic_error("tagged class lost its chain witness");
        }

        for (int p_sub : lattice.subgroups_of(meet)) {
          const PrimaryKind pk = primary_kind(lattice.subgroup(p_sub).order);
          if (!pk.is_primary()) continue;

          if (want_s1 && pk.prime) {
            TripleS1 t;
            t.h1_class = c;
            t.h1_sub = h1;
            t.h2_sub = h2;
            t.p_sub = p_sub;
            t.p_prime = *pk.prime;
            t.h1_witness = *h1_witness;
            t.h2_witness = *h2_witness;
            out.s1.push_back(std::move(t));
          }
          if (want_s2) {
            const long long o1 = lattice.subgroup(h1).order;
            const long long o2 = lattice.subgroup(h2).order;
            if (o1 % 2 == 1 && o2 % 2 == 1) {
              TripleS2 t;
              t.h1_class = c;
              t.h1_sub = h1;
              t.h2_sub = h2;
              t.p_sub = p_sub;
              t.parity = ParityCase::odd_orders;
              out.s2.push_back(t);
            }
            const long long po = lattice.subgroup(p_sub).order;
            if ((o1 / po) % 2 == 1 && (o2 / po) % 2 == 1 &&
                lattice.is_normal_in(p_sub, h1) && lattice.is_normal_in(p_sub, h2)) {
              TripleS2 t;
              t.h1_class = c;
              t.h1_sub = h1;
              t.h2_sub = h2;
              t.p_sub = p_sub;
              t.parity = ParityCase::normal_odd_quotients;
              out.s2.push_back(t);
            }
          }
        }
      }
    } catch (...) {
      failed = true;
    }
  }
  if (failed) throw std::logic_error("triple stream construction failed");

  TripleStreams all;
  for (auto& pc : per_class) {
    all.s1.insert(all.s1.end(), pc.s1.begin(), pc.s1.end());
    all.s2.insert(all.s2.end(), pc.s2.begin(), pc.s2.end());
  }
  return all;
}

Session Session::build(Group G, bool parallel) {
  Session s;
  s.group_ptr = std::make_shared<const Group>(std::move(G));
  LatticeOptions lopt;
  lopt.parallel = parallel;
  s.lattice = SubgroupLattice::enumerate(s.group(), lopt);
  s.tags = tag_classes(s.group(), s.lattice, parallel);
  s.table = compute_character_table(s.group());
  s.reals = realify(s.table, s.group());
  s.oliver = is_oliver(s.group(), s.lattice);
  return s;
}

Session Session::build(Group G, const CharacterTable& imported, bool parallel) {
  Session s;
  s.group_ptr = std::make_shared<const Group>(std::move(G));
  LatticeOptions lopt;
  lopt.parallel = parallel;
  s.lattice = SubgroupLattice::enumerate(s.group(), lopt);
  s.tags = tag_classes(s.group(), s.lattice, parallel);
  if (!verify_orthogonality(imported, s.group()))
    throw std::invalid_argument("imported character table fails orthogonality");
  s.table = imported;
  s.reals = realify(s.table, s.group());
  s.oliver = is_oliver(s.group(), s.lattice);
  return s;
}

CandidateOutcome check_candidate(const Session& session, const TripleStreams& triples,
                                 CandidateModule candidate) {
  const Group& G = session.group();
  const SubgroupLattice& L = session.lattice;

  // fixed dimensions of the candidate per subgroup class
  std::vector<long long> dim_of_class(L.num_classes());
  for (int c = 0; c < L.num_classes(); ++c) {
    const auto& cls = L.classes()[c];
    dim_of_class[c] =
        fixed_dim(candidate.values, L.subgroup(cls.representative).members, G);
  }

  CandidateOutcome out;
  out.candidate = std::move(candidate);

  auto fill_common = [&](TripleCertificate& cert, int h1_sub, int h2_sub, int p_sub) {
    cert.h1_class_label = L.classes()[L.class_of(h1_sub)].label;
    cert.h2_class_label = L.classes()[L.class_of(h2_sub)].label;
    cert.p_class_label = L.classes()[L.class_of(p_sub)].label;
    cert.h1 = L.subgroup(h1_sub).members.members();
    cert.h2 = L.subgroup(h2_sub).members.members();
    cert.p = L.subgroup(p_sub).members.members();
    cert.dim_h1 = dim_of_class[L.class_of(h1_sub)];
    cert.dim_h2 = dim_of_class[L.class_of(h2_sub)];
    cert.dim_p = dim_of_class[L.class_of(p_sub)];
  };

  for (const TripleS1& t : triples.s1) {
    if (dim_of_class[L.class_of(t.p_sub)] != 0) continue;
    TripleCertificate cert;
    cert.strategy = 1;
    fill_common(cert, t.h1_sub, t.h2_sub, t.p_sub);
    cert.p_prime = t.p_prime;
    cert.h1_witness = t.h1_witness;
    cert.h2_witness = t.h2_witness;
    out.kind = OutcomeKind::certified;
    out.certificate = std::move(cert);
    return out;
  }

  for (const TripleS2& t : triples.s2) {
    const long long dp = dim_of_class[L.class_of(t.p_sub)];
    if (dp < 2) continue;  // both summands must be positive
    const long long d1 = dim_of_class[L.class_of(t.h1_sub)];
    if (d1 <= 0) continue;
    const long long d2 = dim_of_class[L.class_of(t.h2_sub)];
    if (d2 <= 0 || d1 + d2 != dp) continue;
    TripleCertificate cert;
    cert.strategy = 2;
    fill_common(cert, t.h1_sub, t.h2_sub, t.p_sub);
    cert.parity = to_string(t.parity);
    out.kind = OutcomeKind::certified;
    out.certificate = std::move(cert);
    return out;
  }

  out.kind = OutcomeKind::unresolved;
  return out;
}

ExclusionReport exclude(const Session& session, const std::string& group_spec, long long n,
                        const ExcludeOptions& options) {
  if (n < 1) throw std::invalid_argument("dimension must be >= 1");
  const Group& G = session.group();

  ExclusionReport report;
  report.group_spec = group_spec;
  report.order = G.order();
  report.degree = G.degree();
  report.exponent = G.exponent();
  report.n = n;
  report.options = options;
  report.oliver = session.oliver;
  report.num_subgroup_classes = session.lattice.num_classes();
  report.table_digest = table_digest(session.table);

  IndexSet kernel = morimoto_kernel(G);
  report.morimoto_kernel_members = kernel.members();

  TripleStreams triples =
      good_triples(G, session.lattice, session.tags, options.strategy, options.parallel);

  std::vector<CandidateModule> candidates = enumerate_candidates(G, session.reals, n);
  report.outcomes.resize(candidates.size());

  const bool par = options.parallel && parallel::enabled();
  std::atomic<bool> failed{false};
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(parallel::thread_count()) if (par)
#endif
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    try {
      if (options.morimoto && !morimoto_filter(candidates[i], kernel, G)) {
        CandidateOutcome out;
        out.morimoto_fixed_dim = fixed_dim(candidates[i].values, kernel, G);
        out.candidate = std::move(candidates[i]);
        out.kind = OutcomeKind::morimoto_excluded;
        report.outcomes[i] = std::move(out);
      } else {
        report.outcomes[i] = check_candidate(session, triples, std::move(candidates[i]));
      }
    } catch (...) {
      failed = true;
    }
  }
  if (failed) throw std::logic_error("candidate checking failed");

  report.excluded = true;
  for (const auto& o : report.outcomes)
    if (o.kind == OutcomeKind::unresolved) report.excluded = false;
  return report;
}

const char* to_string(OutcomeKind kind) {
  switch (kind) {
    case OutcomeKind::morimoto_excluded: return "MORIMOTO_EXCLUDED";
    case OutcomeKind::certified: return "CERTIFIED";
    case OutcomeKind::unresolved: return "UNRESOLVED";
  }
  return "?";
}

const char* to_string(ParityCase parity) {
  return parity == ParityCase::odd_orders ? "odd_orders" : "normal_odd_quotients";
}

}  // namespace oliver
