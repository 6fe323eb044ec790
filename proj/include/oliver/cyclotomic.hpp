#ifndef OLIVER_CYCLOTOMIC_HPP
#define OLIVER_CYCLOTOMIC_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace oliver {

/// Shared context for exact arithmetic in the e-th cyclotomic field.
/// Values are integer-coefficient vectors over the power basis
/// 1, z, ..., z^(phi(e)-1) reduced modulo the e-th cyclotomic polynomial,
/// so equality is representation equality. Character values are algebraic
/// integers, which keeps every coefficient integral end to end.
class CyclotomicField {
public:
  explicit CyclotomicField(long long conductor);

  /// Interned field of the given conductor with static lifetime, so values
  /// can hold plain pointers without ownership bookkeeping.
  static const CyclotomicField& of(long long conductor);

  long long conductor() const { return conductor_; }
  int degree() const { return degree_; }

  /// Coefficients of the e-th cyclotomic polynomial (monic, ascending).
  const std::vector<long long>& min_poly() const { return min_poly_; }

  /// z^k expressed in the power basis, for 0 <= k < e.
  const std::vector<long long>& power_basis_row(long long k) const {
    return rows_[static_cast<std::size_t>(k)];
  }

private:
  long long conductor_;
  int degree_;
  std::vector<long long> min_poly_;
  std::vector<std::vector<long long>> rows_;
};

/// Exact element of a cyclotomic field.
class Cyc {
public:
  Cyc() = default;
  Cyc(const CyclotomicField* field, long long integer_value);

  static Cyc zero(const CyclotomicField* field) { return Cyc(field, 0); }
  static Cyc one(const CyclotomicField* field) { return Cyc(field, 1); }

  /// z^k (k taken mod e).
  static Cyc root_power(const CyclotomicField* field, long long k);

  const CyclotomicField* field() const { return field_; }
  const std::vector<long long>& coeffs() const { return coeffs_; }

  Cyc operator+(const Cyc& o) const;
  Cyc operator-(const Cyc& o) const;
  Cyc operator-() const;
  Cyc operator*(const Cyc& o) const;
  Cyc& operator+=(const Cyc& o) { return *this = *this + o; }
  Cyc& operator-=(const Cyc& o) { return *this = *this - o; }

  Cyc scaled(long long k) const;

  /// Complex conjugate (z -> z^-1).
  Cyc conj() const;

  bool is_zero() const;
  bool is_rational() const;

  /// Integer value when the element is rational; nullopt otherwise.
  std::optional<long long> integer_value() const;

  bool is_real() const { return *this == conj(); }

  bool operator==(const Cyc& o) const { return coeffs_ == o.coeffs_; }
  bool lex_less(const Cyc& o) const { return coeffs_ < o.coeffs_; }

  /// Integer polynomial in z, ascending exponents: "1-z+2z^3".
  std::string to_string() const;

  /// Parses the to_string format (signs, optional coefficients, z powers).
  static Cyc parse(const CyclotomicField* field, std::string_view text);

private:
  const CyclotomicField* field_ = nullptr;
  std::vector<long long> coeffs_;
};

/// Compares two value tuples lexicographically; used for canonical row orders.
bool lex_less(const std::vector<Cyc>& a, const std::vector<Cyc>& b);

}  // namespace oliver

#endif
