#include <vector>

#include "doctest.h"
#include "oliver/cyclotomic.hpp"

using namespace oliver;

namespace {
long long phi(long long n) {
  long long r = n;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      r -= r / d;
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) r -= r / n;
  return r;
}
}  // namespace

TEST_CASE("cyclotomic polynomial degrees and known cases") {
  for (long long e = 1; e <= 30; ++e) {
    CyclotomicField F(e);
    CHECK(F.degree() == phi(e));
  }
  CyclotomicField F12(12);
  CHECK(F12.min_poly() == std::vector<long long>{1, 0, -1, 0, 1});  // x^4 - x^2 + 1
  CyclotomicField F5(5);
  CHECK(F5.min_poly() == std::vector<long long>{1, 1, 1, 1, 1});
}

TEST_CASE("root relations") {
  CyclotomicField F(3);
  Cyc z = Cyc::root_power(&F, 1);
  Cyc z2 = Cyc::root_power(&F, 2);
  CHECK((z * z) == z2);
  CHECK((z + z2 + Cyc::one(&F)).is_zero());

  CyclotomicField F5(5);
  Cyc w = Cyc::root_power(&F5, 1);
  Cyc acc = Cyc::one(&F5);
  Cyc power = Cyc::one(&F5);
  for (int i = 1; i <= 4; ++i) {
    power = power * w;
    acc += power;
  }
  CHECK(acc.is_zero());
  CHECK((power * w) == Cyc::one(&F5));  // z^5 = 1
}

TEST_CASE("conjugation and reality") {
  CyclotomicField F(5);
  Cyc z = Cyc::root_power(&F, 1);
  CHECK(z.conj() == Cyc::root_power(&F, 4));
  CHECK(z.conj().conj() == z);
  Cyc golden = Cyc::one(&F) + z + Cyc::root_power(&F, 4);  // 1 + z + z^-1
  CHECK(golden.is_real());
  CHECK_FALSE(z.is_real());
  CHECK(Cyc(&F, -7).integer_value() == -7);
  CHECK_FALSE(golden.is_rational());
}

TEST_CASE("ring laws on sampled values") {
  CyclotomicField F(12);
  std::vector<Cyc> vals;
  for (int k = 0; k < 12; k += 2) vals.push_back(Cyc::root_power(&F, k) + Cyc(&F, k % 3 - 1));
  for (const auto& a : vals)
    for (const auto& b : vals) {
      CHECK((a * b) == (b * a));
      CHECK((a + b) == (b + a));
      for (const auto& c : vals) CHECK(((a + b) * c) == (a * c + b * c));
    }
}

TEST_CASE("string round trip") {
  CyclotomicField F(8);
  std::vector<Cyc> vals = {
      Cyc(&F, 0), Cyc(&F, 3), Cyc(&F, -2),
      Cyc::root_power(&F, 1).scaled(2) - Cyc::one(&F),
      Cyc::root_power(&F, 3) + Cyc::root_power(&F, 2).scaled(-4),
  };
  for (const auto& v : vals) CHECK(Cyc::parse(&F, v.to_string()) == v);
  CHECK(Cyc::parse(&F, "z+z^2") == Cyc::root_power(&F, 1) + Cyc::root_power(&F, 2));
  CHECK(Cyc::parse(&F, " -1 ") == Cyc(&F, -1));
  CHECK_THROWS(Cyc::parse(&F, "q+1"));
  CHECK_THROWS(Cyc::parse(&F, ""));
}
