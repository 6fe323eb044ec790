#include "oliver/cyclotomic.hpp"

#include <cctype>
#include <memory>
#include <mutex>
#include <map>
#include <stdexcept>

namespace oliver {

namespace {

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("cyclotomic coefficient overflow");
  return r;
}

long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("cyclotomic coefficient overflow");
  return r;
}

// Exact division of integer polynomials, ascending coefficients.
std::vector<long long> poly_div_exact(std::vector<long long> num,
                                      const std::vector<long long>& den) {
  std::vector<long long> q(num.size() - den.size() + 1, 0);
  for (int i = static_cast<int>(q.size()) - 1; i >= 0; --i) {
    long long lead = num[i + den.size() - 1];
    long long dlead = den.back();
    if (lead % dlead != 0) throw std::logic_error("inexact polynomial division");
    long long c = lead / dlead;
    q[i] = c;
    for (std::size_t j = 0; j < den.size(); ++j)
      num[i + j] -= checked_mul(c, den[j]);
  }
  for (long long c : num)
    if (c != 0) throw std::logic_error("nonzero remainder in polynomial division");
  return q;
}

// Cyclotomic polynomials by recursive exact division of x^e - 1.
std::vector<long long> cyclotomic_poly(long long e,
                                       std::map<long long, std::vector<long long>>& cache) {
  auto it = cache.find(e);
  if (it != cache.end()) return it->second;
  std::vector<long long> num(static_cast<std::size_t>(e) + 1, 0);
  num[0] = -1;
  num[static_cast<std::size_t>(e)] = 1;
  for (long long d = 1; d < e; ++d) {
    if (e % d != 0) continue;
    num = poly_div_exact(std::move(num), cyclotomic_poly(d, cache));
  }
  cache.emplace(e, num);
  return num;
}

}  // namespace

const CyclotomicField& CyclotomicField::of(long long conductor) {
  static std::mutex mutex;
  static std::map<long long, std::unique_ptr<const CyclotomicField>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(conductor);
  if (it == cache.end())
    it = cache.emplace(conductor, std::make_unique<const CyclotomicField>(conductor)).first;
  return *it->second;
}

CyclotomicField::CyclotomicField(long long conductor) : conductor_(conductor) {
  if (conductor < 1) throw std::invalid_argument("conductor must be >= 1");
  std::map<long long, std::vector<long long>> cache;
  min_poly_ = cyclotomic_poly(conductor, cache);
  degree_ = static_cast<int>(min_poly_.size()) - 1;

  rows_.resize(static_cast<std::size_t>(conductor_));
  for (long long k = 0; k < conductor_; ++k) {
    auto& row = rows_[static_cast<std::size_t>(k)];
    row.assign(degree_, 0);
    if (k < degree_) {
      row[static_cast<std::size_t>(k)] = 1;
    } else {
      // z^k = z * z^(k-1) reduced modulo the minimal polynomial.
      const auto& prev = rows_[static_cast<std::size_t>(k - 1)];
      long long carry = prev[degree_ - 1];
      for (int i = degree_ - 1; i >= 1; --i) row[i] = prev[i - 1];
      row[0] = 0;
      for (int i = 0; i < degree_; ++i)
        row[i] = checked_add(row[i], checked_mul(-carry, min_poly_[i]));
    }
  }
}

Cyc::Cyc(const CyclotomicField* field, long long integer_value)
    : field_(field), coeffs_(field->degree(), 0) {
  coeffs_[0] = integer_value;
}

Cyc Cyc::root_power(const CyclotomicField* field, long long k) {
  long long e = field->conductor();
  k %= e;
  if (k < 0) k += e;
  Cyc c(field, 0);
  c.coeffs_ = field->power_basis_row(k);
  return c;
}

Cyc Cyc::operator+(const Cyc& o) const {
  Cyc r = *this;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    r.coeffs_[i] = checked_add(r.coeffs_[i], o.coeffs_[i]);
  return r;
}

Cyc Cyc::operator-(const Cyc& o) const {
  Cyc r = *this;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    r.coeffs_[i] = checked_add(r.coeffs_[i], -o.coeffs_[i]);
  return r;
}

Cyc Cyc::operator-() const {
  Cyc r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Cyc Cyc::operator*(const Cyc& o) const {
  const int d = field_->degree();
  const long long e = field_->conductor();
  std::vector<long long> conv(2 * d - 1, 0);
  for (int i = 0; i < d; ++i) {
    if (coeffs_[i] == 0) continue;
    for (int j = 0; j < d; ++j) {
      if (o.coeffs_[j] == 0) continue;
      conv[i + j] = checked_add(conv[i + j], checked_mul(coeffs_[i], o.coeffs_[j]));
    }
  }
  Cyc r(field_, 0);
  for (int t = 0; t < 2 * d - 1; ++t) {
    if (conv[t] == 0) continue;
    if (t < d) {
      r.coeffs_[t] = checked_add(r.coeffs_[t], conv[t]);
    } else {
      const auto& row = field_->power_basis_row(t % e);
      for (int i = 0; i < d; ++i)
        r.coeffs_[i] = checked_add(r.coeffs_[i], checked_mul(conv[t], row[i]));
    }
  }
  return r;
}

Cyc Cyc::scaled(long long k) const {
  Cyc r = *this;
  for (auto& c : r.coeffs_) c = checked_mul(c, k);
  return r;
}

Cyc Cyc::conj() const {
  const long long e = field_->conductor();
  Cyc r(field_, 0);
  for (int k = 0; k < field_->degree(); ++k) {
    if (coeffs_[k] == 0) continue;
    const auto& row = field_->power_basis_row((e - k) % e);
    for (int i = 0; i < field_->degree(); ++i)
      r.coeffs_[i] = checked_add(r.coeffs_[i], checked_mul(coeffs_[k], row[i]));
  }
  return r;
}

bool Cyc::is_zero() const {
  for (long long c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool Cyc::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

std::optional<long long> Cyc::integer_value() const {
  if (!is_rational()) return std::nullopt;
  return coeffs_[0];
}

std::string Cyc::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    long long c = coeffs_[k];
    if (c == 0) continue;
    if (!out.empty() && c > 0) out += '+';
    if (k == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c == -1)
      out += '-';
    else if (c != 1)
      out += std::to_string(c);
    out += 'z';
    if (k > 1) out += "^" + std::to_string(k);
  }
  if (out.empty()) out = "0";
  return out;
}

Cyc Cyc::parse(const CyclotomicField* field, std::string_view text) {
  Cyc r(field, 0);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i == text.size()) throw std::invalid_argument("empty cyclotomic value");
  while (i < text.size()) {
    long long sign = 1;
    skip_ws();
    if (text[i] == '+' || text[i] == '-') {
      if (text[i] == '-') sign = -1;
      ++i;
      skip_ws();
    }
    bool have_coeff = false;
    long long coeff = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      coeff = checked_add(checked_mul(coeff, 10), text[i] - '0');
      ++i;
      have_coeff = true;
    }
    long long exp = 0;
    bool have_z = false;
    skip_ws();
    if (i < text.size() && (text[i] == 'z' || text[i] == 'Z')) {
      have_z = true;
      exp = 1;
      ++i;
      skip_ws();
      if (i < text.size() && text[i] == '^') {
        ++i;
        skip_ws();
        if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
          throw std::invalid_argument("expected exponent after '^'");
        exp = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
          exp = checked_add(checked_mul(exp, 10), text[i] - '0');
          ++i;
        }
      }
    }
    if (!have_coeff && !have_z)
      throw std::invalid_argument("malformed cyclotomic value");
    if (!have_coeff) coeff = 1;
    r += root_power(field, exp).scaled(sign * coeff);
    skip_ws();
  }
  return r;
}

bool lex_less(const std::vector<Cyc>& a, const std::vector<Cyc>& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i].coeffs() < b[i].coeffs()) return true;
    if (b[i].coeffs() < a[i].coeffs()) return false;
  }
  return a.size() < b.size();
}

}  // namespace oliver
