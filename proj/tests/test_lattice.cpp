#include <set>

#include "doctest.h"
#include "oliver/lattice.hpp"
#include "test_helpers.hpp"

using namespace oliver;

namespace {

// Independent oracle: every subset containing the identity, tested for
// closure under products and inverses. Only feasible for tiny groups.
long long brute_force_subgroup_count(const Group& G) {
  const int n = static_cast<int>(G.order());
  REQUIRE(n <= 16);
  long long count = 0;
  for (std::uint32_t mask = 1; mask < (1u << n); mask += 2) {  // bit 0 = identity
    bool closed = true;
    for (int a = 0; a < n && closed; ++a) {
      if (!(mask >> a & 1)) continue;
      if (!(mask >> G.inv(a) & 1)) {
        closed = false;
        break;
      }
      for (int b = 0; b < n; ++b) {
        if (!(mask >> b & 1)) continue;
        if (!(mask >> G.mul(a, b) & 1)) {
          closed = false;
          break;
        }
      }
    }
    if (closed) ++count;
  }
  return count;
}

Group make_s4() {
  return Group::generate({Perm::parse("(1,2,3,4)", 4), Perm::parse("(1,2)", 4)});
}

}  // namespace

TEST_CASE("subgroups of S4") {
  Group G = make_s4();
  SubgroupLattice L = SubgroupLattice::enumerate(G);
  CHECK(L.num_subgroups() == 30);
  CHECK(L.num_classes() == 11);

  // Lagrange plus canonical sorting
  long long prev_order = 0;
  for (const auto& s : L.subgroups()) {
    CHECK(G.order() % s.order == 0);
    CHECK(s.order >= prev_order);
    prev_order = s.order;
  }
  for (const auto& c : L.classes())
    for (int s : c.conjugates) CHECK(L.subgroup(s).order == c.order);
}

TEST_CASE("small-group oracle agreement") {
  auto check = [](Group G) {
    SubgroupLattice L = SubgroupLattice::enumerate(G);
    CHECK(L.num_subgroups() == brute_force_subgroup_count(G));
  };
  check(Group::generate({Perm::parse("(1,2,3)", 3), Perm::parse("(1,2)", 3)}));  // S3
  check(Group::generate({Perm::parse("(1,2,3,4)", 4), Perm::parse("(2,4)", 4)}));  // D8
  check(Group::generate({Perm::parse("(1,2,3,4,5,6,7,8,9,10,11,12)", 12)}));  // C12
  check(testing::make_q8());
}

TEST_CASE("Q8 has six subgroups") {
  SubgroupLattice L = SubgroupLattice::enumerate(testing::make_q8());
  CHECK(L.num_subgroups() == 6);
  CHECK(L.num_classes() == 6);  // all normal
  for (const auto& c : L.classes()) CHECK(c.is_normal);
}

TEST_CASE("trivial group") {
  SubgroupLattice L = SubgroupLattice::enumerate(Group::generate({Perm(1)}));
  CHECK(L.num_subgroups() == 1);
  CHECK(L.num_classes() == 1);
}

TEST_CASE("subgroup count limit") {
  LatticeOptions opts;
  opts.max_subgroups = 5;
  CHECK_THROWS_AS(SubgroupLattice::enumerate(make_s4(), opts), std::runtime_error);
}

TEST_CASE("prime cyclic groups have two classes") {
  for (int p : {2, 3, 5, 7, 11}) {
    std::string cyc = "(";
    for (int i = 1; i <= p; ++i) cyc += std::to_string(i) + (i < p ? "," : ")");
    Group G = Group::generate({Perm::parse(cyc, p)});
    CHECK(SubgroupLattice::enumerate(G).num_classes() == 2);
  }
}

TEST_CASE("meet and join nest") {
  Group G = Group::generate(testing::a5c3_generators());
  SubgroupLattice L = SubgroupLattice::enumerate(G);
  for (int a = 0; a < L.num_subgroups(); a += 11) {
    for (int b = 0; b < L.num_subgroups(); b += 13) {
      const IndexSet meet = L.subgroup(a).members & L.subgroup(b).members;
      std::vector<int> seed = L.subgroup(a).gens;
      seed.insert(seed.end(), L.subgroup(b).gens.begin(), L.subgroup(b).gens.end());
      IndexSet join = G.closure(seed);
      CHECK(meet.subset_of(L.subgroup(a).members));
      CHECK(L.subgroup(a).members.subset_of(join));
    }
  }
}

TEST_CASE("S3 classes") {
  Group S3 = Group::generate({Perm::parse("(1,2,3)", 3), Perm::parse("(1,2)", 3)});
  SubgroupLattice L = SubgroupLattice::enumerate(S3);
  REQUIRE(L.num_classes() == 4);
  std::vector<long long> orders;
  for (const auto& c : L.classes()) orders.push_back(c.order);
  CHECK(orders == std::vector<long long>{1, 2, 3, 6});
  CHECK(L.classes()[1].conjugates.size() == 3);  // the three reflections
  CHECK_FALSE(L.classes()[1].is_normal);
  CHECK(L.classes()[2].is_normal);
}

TEST_CASE("the example group has 21 subgroup classes") {
  Group G = Group::generate(testing::a5c3_generators());
  SubgroupLattice L = SubgroupLattice::enumerate(G);
  CHECK(L.num_classes() == 21);
}

TEST_CASE("intersection") {
  Group G = Group::generate(testing::a5c3_generators());
  SubgroupLattice L = SubgroupLattice::enumerate(G);

  // A cap A = A
  for (int s = 0; s < L.num_subgroups(); s += 7) CHECK(L.intersect(s, s) == s);

  // the C6 and C3xC3 representatives share the central C3
  IndexSet h1 = G.closure(std::vector<int>{G.index_of(Perm::parse("(2,5)(3,4)", 8)),
                                           G.index_of(Perm::parse("(6,8,7)", 8))});
  IndexSet h2 = G.closure(std::vector<int>{G.index_of(Perm::parse("(2,4,5)", 8)),
                                           G.index_of(Perm::parse("(6,8,7)", 8))});
  int i1 = *L.find(h1);
  int i2 = *L.find(h2);
  int meet = L.intersect(i1, i2);
  IndexSet central = G.closure(std::vector<int>{G.index_of(Perm::parse("(6,8,7)", 8))});
  CHECK(central.subset_of(L.subgroup(meet).members));

  // two distinct order-2 subgroups of V4 meet trivially
  Group V4 = Group::generate({Perm::parse("(1,2)", 4), Perm::parse("(3,4)", 4)});
  SubgroupLattice LV = SubgroupLattice::enumerate(V4);
  std::vector<int> order2;
  for (int s = 0; s < LV.num_subgroups(); ++s)
    if (LV.subgroup(s).order == 2) order2.push_back(s);
  REQUIRE(order2.size() == 3);
  CHECK(LV.subgroup(LV.intersect(order2[0], order2[1])).order == 1);
}

TEST_CASE("normality queries") {
  Group S3 = Group::generate({Perm::parse("(1,2,3)", 3), Perm::parse("(1,2)", 3)});
  SubgroupLattice L = SubgroupLattice::enumerate(S3);
  int c3 = -1, c2 = -1, full = L.full_subgroup();
  for (int s = 0; s < L.num_subgroups(); ++s) {
    if (L.subgroup(s).order == 3) c3 = s;
    if (L.subgroup(s).order == 2 && c2 == -1) c2 = s;
  }
  CHECK(L.is_normal_in(c3, full));
  CHECK_FALSE(L.is_normal_in(c2, full));
  CHECK(L.is_normal_in(c2, c2));  // P = H
  CHECK_THROWS(L.is_normal_in(full, c2));

  // normal classes of S4: 1, V4, A4, S4
  SubgroupLattice LS4 = SubgroupLattice::enumerate(make_s4());
  std::vector<long long> normal_orders;
  for (int c : LS4.normal_classes()) normal_orders.push_back(LS4.classes()[c].order);
  CHECK(normal_orders == std::vector<long long>{1, 4, 12, 24});

  // A5 is simple
  Group A5 = Group::generate({Perm::parse("(1,2,3,4,5)", 5), Perm::parse("(1,2,3)", 5)});
  CHECK(A5.order() == 60);
  SubgroupLattice LA5 = SubgroupLattice::enumerate(A5);
  CHECK(LA5.normal_classes().size() == 2);

  // every subgroup of an abelian group is normal
  Group C12 = Group::generate({Perm::parse("(1,2,3,4,5,6,7,8,9,10,11,12)", 12)});
  SubgroupLattice LC = SubgroupLattice::enumerate(C12);
  for (const auto& c : LC.classes()) CHECK(c.is_normal);
}

TEST_CASE("cyclic quotients") {
  Group S4 = make_s4();
  SubgroupLattice L = SubgroupLattice::enumerate(S4);
  int v4 = -1, a4 = -1, trivial = L.trivial_subgroup();
  for (int s = 0; s < L.num_subgroups(); ++s) {
    if (L.subgroup(s).order == 12) a4 = s;
    if (L.subgroup(s).order == 4 && L.classes()[L.class_of(s)].is_normal) v4 = s;
  }
  REQUIRE(a4 != -1);
  REQUIRE(v4 != -1);
  CHECK(L.quotient_is_cyclic(a4, a4));            // trivial quotient
  CHECK(L.quotient_is_cyclic(a4, v4));            // A4/V4 = C3
  CHECK_FALSE(L.quotient_is_cyclic(v4, trivial)); // V4 itself is not cyclic

  Group S3 = Group::generate({Perm::parse("(1,2,3)", 3), Perm::parse("(1,2)", 3)});
  SubgroupLattice L3 = SubgroupLattice::enumerate(S3);
  int c3 = -1;
  for (int s = 0; s < L3.num_subgroups(); ++s)
    if (L3.subgroup(s).order == 3) c3 = s;
  CHECK(L3.quotient_is_cyclic(L3.full_subgroup(), c3));  // S3/C3 = C2
}

TEST_CASE("conjugates partition the subgroup list") {
  Group G = Group::generate(testing::a5c3_generators());
  SubgroupLattice L = SubgroupLattice::enumerate(G);
  std::set<int> seen;
  for (const auto& c : L.classes()) {
    for (int s : c.conjugates) {
      CHECK(seen.insert(s).second);
      CHECK(L.class_of(s) == c.id);
    }
    CHECK(c.representative == c.conjugates.front());
  }
  CHECK(static_cast<int>(seen.size()) == L.num_subgroups());
}
