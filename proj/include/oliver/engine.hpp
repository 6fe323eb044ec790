#ifndef OLIVER_ENGINE_HPP
#define OLIVER_ENGINE_HPP

#include <optional>
#include <string>
#include <vector>

#include "oliver/chartable.hpp"
#include "oliver/fixeddim.hpp"
#include "oliver/group.hpp"
#include "oliver/groupclasses.hpp"
#include "oliver/lattice.hpp"
#include "oliver/realchars.hpp"

namespace oliver {

/// Witness that a subgroup H lies in some G_p^q: a chain P normal in H'
/// normal in H with P of prime-power (or trivial) order, H/H' of prime-power
/// (or trivial) index, and an element whose coset generates the cyclic H'/P.
struct GpqWitness {
  std::vector<int> mid_members;     // H', element indices
  std::vector<int> normal_members;  // P, element indices
  int coset_generator = 0;          // element index, generates H'/P
};

/// Strategy-1 triple: H1 a class representative, H2 any conjugate, P a
/// nontrivial primary subgroup of the intersection, H1 and H2 members of the
/// chain family and generating G together.
struct TripleS1 {
  int h1_class = 0;
  int h1_sub = 0;
  int h2_sub = 0;
  int p_sub = 0;
  long long p_prime = 0;
  GpqWitness h1_witness;
  GpqWitness h2_witness;
};

/// Strategy-2 triple: generation plus a p-group P (trivial allowed) inside
/// the intersection and one of the parity cases.
enum class ParityCase { odd_orders, normal_odd_quotients };

struct TripleS2 {
  int h1_class = 0;
  int h1_sub = 0;
  int h2_sub = 0;
  int p_sub = 0;
  ParityCase parity = ParityCase::odd_orders;
};

struct TripleStreams {
  std::vector<TripleS1> s1;
  std::vector<TripleS2> s2;
};

enum class StrategyFilter { both, only1, only2 };

TripleStreams good_triples(const Group& G, const SubgroupLattice& lattice,
                           const std::vector<ClassTags>& tags, StrategyFilter filter,
                           bool parallel = true);

/// Everything a verifier needs to recheck one excluded candidate.
struct TripleCertificate {
  int strategy = 0;  // 1 or 2
  std::string h1_class_label, h2_class_label, p_class_label;
  std::vector<int> h1, h2, p;  // element indices
  long long p_prime = 0;       // strategy 1
  GpqWitness h1_witness, h2_witness;  // strategy 1
  std::string parity;          // strategy 2: "odd_orders" | "normal_odd_quotients"
  long long dim_h1 = 0, dim_h2 = 0, dim_p = 0;
};

enum class OutcomeKind { morimoto_excluded, certified, unresolved };

struct CandidateOutcome {
  CandidateModule candidate;
  OutcomeKind kind = OutcomeKind::unresolved;
  std::optional<TripleCertificate> certificate;
  long long morimoto_fixed_dim = -1;  // recorded when the filter excluded it
};

struct ExcludeOptions {
  bool morimoto = true;
  StrategyFilter strategy = StrategyFilter::both;
  long long element_cap = kDefaultElementCap;
  bool parallel = true;
};

struct ExclusionReport {
  std::string group_spec;
  long long order = 0;
  int degree = 0;
  long long exponent = 0;
  long long n = 0;
  ExcludeOptions options;
  bool oliver = false;
  int num_subgroup_classes = 0;
  std::vector<int> morimoto_kernel_members;
  std::vector<CandidateOutcome> outcomes;
  bool excluded = false;  // no candidate left unresolved
  std::string table_digest;
};

/// Precomputed per-group state shared across dimensions. The group lives
/// behind a shared_ptr so the lattice's back-reference stays valid when the
/// session moves.
struct Session {
  std::shared_ptr<const Group> group_ptr;
  SubgroupLattice lattice;
  std::vector<ClassTags> tags;
  CharacterTable table;
  std::vector<RealCharacter> reals;
  bool oliver = false;

  const Group& group() const { return *group_ptr; }

  static Session build(Group G, bool parallel = true);
  static Session build(Group G, const CharacterTable& imported, bool parallel = true);
};

/// Checks one candidate against the precomputed streams; first hit in
/// deterministic order (strategy 1 before 2, then stream order) wins.
CandidateOutcome check_candidate(const Session& session, const TripleStreams& triples,
                                 CandidateModule candidate);

/// Runs the whole pipeline for (G, n).
ExclusionReport exclude(const Session& session, const std::string& group_spec, long long n,
                        const ExcludeOptions& options);

const char* to_string(OutcomeKind kind);
const char* to_string(ParityCase parity);

}  // namespace oliver

#endif
