#include <algorithm>

#include "doctest.h"
#include "oliver/chartable.hpp"
#include "test_helpers.hpp"

using namespace oliver;

namespace {

Group make_s3() {
  return Group::generate({Perm::parse("(1,2,3)", 3), Perm::parse("(1,2)", 3)});
}

std::vector<long long> sorted_degrees(const CharacterTable& t) {
  auto d = t.degrees;
  std::sort(d.begin(), d.end());
  return d;
}

long long involution_count(const Group& G) {
  long long c = 0;
  for (int g = 0; g < G.order(); ++g)
    if (G.mul(g, g) == G.identity()) ++c;
  return c;
}

void check_fs_suite(const Group& G) {
  CharacterTable t = compute_character_table(G);
  long long sq = 0;
  for (long long d : t.degrees) sq += d * d;
  CHECK(sq == G.order());
  CHECK(verify_orthogonality(t, G));
  long long fs_weighted = 0;
  for (int i = 0; i < t.num_irreducibles(); ++i) {
    int nu = frobenius_schur(t, i, G);
    CHECK(nu >= -1);
    CHECK(nu <= 1);
    fs_weighted += nu * t.degrees[i];
  }
  CHECK(fs_weighted == involution_count(G));
}

}  // namespace

TEST_CASE("class multiplication coefficients") {
  Group S3 = make_s3();
  auto a = class_mult_coeffs(S3);
  // identity class is index 0
  CHECK(a[0][0][0] == 1);
  // transpositions times transpositions hit the identity 3 times
  CHECK(a[1][1][0] == 3);

  Group C2 = Group::generate({Perm::parse("(1,2)", 2)});
  auto b = class_mult_coeffs(C2);
  CHECK(b[1][1][0] == 1);

  // independence of the fixed class representative: check the defining count
  // against a full convolution over all pairs
  for (int i = 0; i < S3.num_classes(); ++i)
    for (int j = 0; j < S3.num_classes(); ++j)
      for (int k = 0; k < S3.num_classes(); ++k) {
        long long count = 0;
        int z = S3.classes()[k].representative;
        for (int x : S3.classes()[i].members)
          for (int y : S3.classes()[j].members)
            if (S3.mul(x, y) == z) ++count;
        CHECK(a[i][j][k] == count);
      }
}

TEST_CASE("trivial group table") {
  CharacterTable t = compute_character_table(Group::generate({Perm(1)}));
  CHECK(t.num_irreducibles() == 1);
  CHECK(t.degrees == std::vector<long long>{1});
  CHECK(t.rows[0][0].integer_value() == 1);
}

TEST_CASE("cyclic group tables match the direct construction") {
  for (int n : {2, 3, 5, 6, 12}) {
    std::string cyc = "(";
    for (int i = 1; i <= n; ++i) cyc += std::to_string(i) + (i < n ? "," : ")");
    Group G = Group::generate({Perm::parse(cyc, n)});
    CharacterTable t = compute_character_table(G);
    REQUIRE(t.num_irreducibles() == n);

    // independent oracle: chi_j(g^k) = zeta^(jk), rows canonically sorted
    int gen = G.index_of(G.generators()[0]);
    std::vector<long long> dlog(n);
    {
      int cur = G.identity();
      for (int k = 0; k < n; ++k) {
        dlog[cur] = k;
        cur = G.mul(cur, gen);
      }
    }
    std::vector<std::vector<Cyc>> expect;
    for (int j = 0; j < n; ++j) {
      std::vector<Cyc> row;
      for (int c = 0; c < n; ++c) {
        long long k = dlog[G.classes()[c].representative];
        row.push_back(Cyc::root_power(t.field, j * k));
      }
      expect.push_back(std::move(row));
    }
    std::sort(expect.begin(), expect.end(),
              [](const auto& a, const auto& b) { return lex_less(a, b); });
    std::vector<std::vector<Cyc>> got = t.rows;
    std::sort(got.begin(), got.end(),
              [](const auto& a, const auto& b) { return lex_less(a, b); });
    CHECK(got == expect);
  }
}

TEST_CASE("degrees of standard groups") {
  Group A5 = Group::generate({Perm::parse("(1,2,3,4,5)", 5), Perm::parse("(1,2,3)", 5)});
  CHECK(sorted_degrees(compute_character_table(A5)) ==
        std::vector<long long>{1, 3, 3, 4, 5});

  Group S4 = Group::generate({Perm::parse("(1,2,3,4)", 4), Perm::parse("(1,2)", 4)});
  CHECK(sorted_degrees(compute_character_table(S4)) ==
        std::vector<long long>{1, 1, 2, 3, 3});

  CHECK(sorted_degrees(compute_character_table(testing::make_q8())) ==
        std::vector<long long>{1, 1, 1, 1, 2});

  Group G = Group::generate(testing::a5c3_generators());
  CHECK(sorted_degrees(compute_character_table(G)) ==
        std::vector<long long>{1, 1, 1, 3, 3, 3, 3, 3, 3, 4, 4, 4, 5, 5, 5});
}

TEST_CASE("identity column equals the degrees") {
  Group S3 = make_s3();
  CharacterTable t = compute_character_table(S3);
  for (int i = 0; i < t.num_irreducibles(); ++i)
    CHECK(t.rows[i][0].integer_value() == t.degrees[i]);
}

TEST_CASE("orthogonality holds and detects perturbations") {
  Group S3 = make_s3();
  CharacterTable t = compute_character_table(S3);
  CHECK(verify_orthogonality(t, S3));

  CharacterTable bad = t;
  bad.rows[1][1] += Cyc::one(t.field);
  CHECK_FALSE(verify_orthogonality(bad, S3));

  // hand-checked C2 table: rows {1,-1} and {1,1}, the sign row sorting first
  Group C2 = Group::generate({Perm::parse("(1,2)", 2)});
  CharacterTable t2 = compute_character_table(C2);
  CHECK(verify_orthogonality(t2, C2));
  CHECK(t2.rows[0][0].integer_value() == 1);
  CHECK(t2.rows[0][1].integer_value() == -1);
  CHECK(t2.rows[1][0].integer_value() == 1);
  CHECK(t2.rows[1][1].integer_value() == 1);
}

TEST_CASE("Frobenius-Schur indicators") {
  Group C3 = Group::generate({Perm::parse("(1,2,3)", 3)});
  CharacterTable t = compute_character_table(C3);
  // the trivial character is real, the two others form a conjugate pair
  int trivial_row = -1;
  for (int i = 0; i < 3; ++i) {
    bool all_one = true;
    for (int c = 0; c < 3; ++c)
      if (!(t.rows[i][c].integer_value() == 1)) all_one = false;
    if (all_one) trivial_row = i;
  }
  REQUIRE(trivial_row != -1);
  CHECK(frobenius_schur(t, trivial_row, C3) == 1);
  for (int i = 0; i < 3; ++i)
    if (i != trivial_row) CHECK(frobenius_schur(t, i, C3) == 0);

  // the two-dimensional irreducible of Q8 is quaternionic
  Group Q8 = testing::make_q8();
  CharacterTable tq = compute_character_table(Q8);
  for (int i = 0; i < tq.num_irreducibles(); ++i)
    if (tq.degrees[i] == 2) CHECK(frobenius_schur(tq, i, Q8) == -1);
}

TEST_CASE("indicator suite across groups") {
  check_fs_suite(make_s3());
  check_fs_suite(Group::generate({Perm::parse("(1,2,3,4)", 4), Perm::parse("(1,2)", 4)}));
  check_fs_suite(testing::make_q8());
  check_fs_suite(Group::generate({Perm::parse("(1,2,3,4,5)", 5), Perm::parse("(1,2,3)", 5)}));
  check_fs_suite(Group::generate(testing::a5c3_generators()));
}
