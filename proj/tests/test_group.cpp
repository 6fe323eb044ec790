#include <vector>

#include "doctest.h"
#include "oliver/group.hpp"
#include "test_helpers.hpp"

using namespace oliver;

TEST_CASE("generate the order-180 example group") {
  Group G = Group::generate(testing::a5c3_generators());
  CHECK(G.order() == 180);
  CHECK(G.exponent() == 30);
  CHECK(G.num_classes() == 15);  // 5 classes times 3 central classes

  long long class_sum = 0;
  for (const auto& c : G.classes()) {
    class_sum += c.size;
    CHECK(G.order() % c.size == 0);
  }
  CHECK(class_sum == G.order());
}

TEST_CASE("trivial and tiny groups") {
  Group T = Group::generate({Perm(3)});
  CHECK(T.order() == 1);
  CHECK(T.num_classes() == 1);

  // <(1,2,3),(1,2)> is the full symmetric group on three points
  Group S3 = Group::generate({Perm::parse("(1,2,3)", 3), Perm::parse("(1,2)", 3)});
  CHECK(S3.order() == 6);
  REQUIRE(S3.num_classes() == 3);
  // classes ordered by element order: sizes 1, 3, 2
  CHECK(S3.classes()[0].size == 1);
  CHECK(S3.classes()[1].size == 3);
  CHECK(S3.classes()[1].element_order == 2);
  CHECK(S3.classes()[2].size == 2);
  CHECK(S3.classes()[2].element_order == 3);
}

TEST_CASE("generation is deterministic and respects the cap") {
  Group a = Group::generate(testing::a5c3_generators());
  Group b = Group::generate(testing::a5c3_generators());
  CHECK(a.elements() == b.elements());

  CHECK_THROWS_AS(
      Group::generate({Perm::parse("(1,2,3,4)", 4), Perm::parse("(1,2)", 4)}, 10),
      GroupTooLarge);
}

TEST_CASE("multiplication tables and inverses") {
  Group G = Group::generate({Perm::parse("(1,2,3,4)", 4), Perm::parse("(1,2)", 4)});
  CHECK(G.order() == 24);
  for (int i = 0; i < G.order(); ++i) {
    CHECK(G.mul(i, G.inv(i)) == G.identity());
    CHECK(G.mul(G.identity(), i) == i);
  }
  testing::Lcg rng;
  for (int t = 0; t < 100; ++t) {
    int a = rng.below(24), b = rng.below(24), c = rng.below(24);
    CHECK(G.mul(G.mul(a, b), c) == G.mul(a, G.mul(b, c)));
  }
}

TEST_CASE("power map") {
  Group C3 = Group::generate({Perm::parse("(1,2,3)", 3)});
  auto pm1 = C3.power_map(1);
  CHECK(pm1 == std::vector<int>{0, 1, 2});
  auto pm2 = C3.power_map(2);
  // squaring swaps the two nontrivial classes
  CHECK(pm2[0] == 0);
  CHECK(pm2[1] == 2);
  CHECK(pm2[2] == 1);

  Group S3 = Group::generate({Perm::parse("(1,2,3)", 3), Perm::parse("(1,2)", 3)});
  auto s3pm2 = S3.power_map(2);
  CHECK(s3pm2[1] == 0);  // transpositions square to the identity

  // power_map(k) then power_map(m) equals power_map(k*m)
  Group G = Group::generate(testing::a5c3_generators());
  for (long long k : {2, 3, 5}) {
    for (long long m : {2, 7}) {
      auto pk = G.power_map(k);
      auto pm = G.power_map(m);
      auto pkm = G.power_map(k * m);
      for (int c = 0; c < G.num_classes(); ++c) CHECK(pm[pk[c]] == pkm[c]);
    }
  }

  // well-defined on every member, not just the representative
  auto pm3 = G.power_map(3);
  for (int c = 0; c < G.num_classes(); ++c)
    for (int m : G.classes()[c].members)
      CHECK(G.class_of(G.power(m, 3)) == pm3[c]);
}

TEST_CASE("closure") {
  Group G = Group::generate(testing::a5c3_generators());
  std::vector<int> id{G.identity()};
  CHECK(G.closure(id).count() == 1);

  // a 3-cycle in S3 closes to its cyclic subgroup
  Group S3 = Group::generate({Perm::parse("(1,2,3)", 3), Perm::parse("(1,2)", 3)});
  std::vector<int> seed{S3.index_of(Perm::parse("(1,2,3)", 3))};
  CHECK(S3.closure(seed).count() == 3);

  // the two example generators together close to the whole group
  std::vector<int> both{G.index_of(testing::a5c3_generators()[0]),
                        G.index_of(testing::a5c3_generators()[1])};
  CHECK(G.closure(both).count() == 180);

  // the worked example's pair of subgroups generates everything:
  // <(2,5)(3,4),(6,8,7)> of type C6 together with <(1,5,4),(6,8,7)>
  std::vector<int> pair{G.index_of(Perm::parse("(2,5)(3,4)", 8)),
                        G.index_of(Perm::parse("(6,8,7)", 8)),
                        G.index_of(Perm::parse("(1,5,4)", 8))};
  CHECK(G.closure(pair).count() == 180);
}

TEST_CASE("products work without the multiplication table") {
  // order above the table limit exercises the hash-lookup path
  std::vector<int> img(4099);
  for (int i = 0; i < 4099; ++i) img[i] = (i + 1) % 4099;
  Group G = Group::generate({Perm(img)});
  CHECK(G.order() == 4099);
  CHECK(G.exponent() == 4099);
  CHECK(G.num_classes() == 4099);
  int g = G.index_of(G.generators()[0]);
  CHECK(G.mul(g, G.inv(g)) == G.identity());
  CHECK(G.power(g, 4099) == G.identity());
}

TEST_CASE("square closure") {
  // C2: squares generate only the identity
  Group C2 = Group::generate({Perm::parse("(1,2)", 2)});
  CHECK(C2.square_closure().count() == 1);

  // S5: squares generate the even permutations
  Group S5 = Group::generate({Perm::parse("(1,2,3,4,5)", 5), Perm::parse("(1,2)", 5)});
  IndexSet K = S5.square_closure();
  CHECK(K.count() == 60);

  Group G = Group::generate(testing::a5c3_generators());
  CHECK(G.square_closure().count() == 180);
}
