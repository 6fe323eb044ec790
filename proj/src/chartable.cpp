#include "oliver/chartable.hpp"

#include <algorithm>
#include <stdexcept>

namespace oliver {

namespace {

// ---- arithmetic mod a word-sized prime -------------------------------------

long long mod_pow(long long base, long long exp, long long p) {
  long long r = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1) r = (__int128)r * base % p;
    base = (__int128)base * base % p;
    exp >>= 1;
  }
  return r;
}

long long mod_inv(long long a, long long p) { return mod_pow(((a % p) + p) % p, p - 2, p); }

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<long long> prime_factors(long long n) {
  std::vector<long long> out;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

using Row = std::vector<long long>;
using Mat = std::vector<Row>;

// Coordinates of each target in the span of the basis rows (all length k).
// Throws if some target is outside the span.
Mat coordinates_in_span(const Mat& basis, const Mat& targets, long long p) {
  const int k = static_cast<int>(basis[0].size());
  const int d = static_cast<int>(basis.size());
  const int m = static_cast<int>(targets.size());
  // Augmented system: columns are basis vectors, then target vectors.
  Mat aug(k, Row(d + m, 0));
  for (int j = 0; j < d; ++j)
    for (int i = 0; i < k; ++i) aug[i][j] = basis[j][i] % p;
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < k; ++i) aug[i][d + j] = targets[j][i] % p;

  std::vector<int> pivot_col_of_row;
  int row = 0;
  for (int col = 0; col < d && row < k; ++col) {
    int pr = -1;
    for (int r = row; r < k; ++r)
      if (aug[r][col] != 0) {
        pr = r;
        break;
      }
    if (pr == -1) continue;
    std::swap(aug[row], aug[pr]);
    long long inv = mod_inv(aug[row][col], p);
    for (int j = col; j < d + m; ++j) aug[row][j] = (__int128)aug[row][j] * inv % p;
    for (int r = 0; r < k; ++r) {
      if (r == row || aug[r][col] == 0) continue;
      long long f = aug[r][col];
      for (int j = col; j < d + m; ++j)
        aug[r][j] = ((aug[r][j] - (__int128)f * aug[row][j]) % p + p) % p;
    }
    pivot_col_of_row.push_back(col);
    ++row;
  }
  if (static_cast<int>(pivot_col_of_row.size()) != d)
    throw std::logic_error("basis rows are not independent");
  for (int r = row; r < k; ++r)
    for (int j = 0; j < m; ++j)
      if (aug[r][d + j] != 0) throw std::logic_error("vector outside invariant subspace");

  Mat coords(m, Row(d, 0));
  for (int r = 0; r < row; ++r)
    for (int j = 0; j < m; ++j) coords[j][pivot_col_of_row[r]] = aug[r][d + j];
  return coords;
}

// Null space basis of a square matrix mod p (rows of the result).
Mat kernel_basis(Mat a, long long p) {
  const int n = static_cast<int>(a.size());
  std::vector<int> pivot_col_of_row;
  int row = 0;
  for (int col = 0; col < n && row < n; ++col) {
    int pr = -1;
    for (int r = row; r < n; ++r)
      if (a[r][col] % p != 0) {
        pr = r;
        break;
      }
    if (pr == -1) continue;
    std::swap(a[row], a[pr]);
    long long inv = mod_inv(a[row][col], p);
    for (int j = 0; j < n; ++j) a[row][j] = ((__int128)a[row][j] % p * inv % p + p) % p;
    for (int r = 0; r < n; ++r) {
      if (r == row || a[r][col] % p == 0) continue;
      long long f = ((a[r][col] % p) + p) % p;
      for (int j = 0; j < n; ++j)
        a[r][j] = ((a[r][j] - (__int128)f * a[row][j]) % p + p) % p;
    }
    pivot_col_of_row.push_back(col);
    ++row;
  }
  std::vector<char> is_pivot(n, 0);
  for (int c : pivot_col_of_row) is_pivot[c] = 1;
  Mat kernel;
  for (int free_col = 0; free_col < n; ++free_col) {
    if (is_pivot[free_col]) continue;
    Row v(n, 0);
    v[free_col] = 1;
    for (int r = 0; r < static_cast<int>(pivot_col_of_row.size()); ++r)
      v[pivot_col_of_row[r]] = (p - a[r][free_col] % p) % p;
    kernel.push_back(std::move(v));
  }
  return kernel;
}

// Characteristic polynomial det(lambda I - A) mod p via Hessenberg reduction.
Row char_poly(Mat a, long long p) {
  const int n = static_cast<int>(a.size());
  for (auto& r : a)
    for (auto& x : r) x = ((x % p) + p) % p;

  // Similarity reduction to upper Hessenberg form.
  for (int col = 0; col + 2 < n; ++col) {
    int pr = -1;
    for (int r = col + 1; r < n; ++r)
      if (a[r][col] != 0) {
        pr = r;
        break;
      }
    if (pr == -1) continue;
    if (pr != col + 1) {
      std::swap(a[pr], a[col + 1]);
      for (int r = 0; r < n; ++r) std::swap(a[r][pr], a[r][col + 1]);
    }
    long long inv = mod_inv(a[col + 1][col], p);
    for (int r = col + 2; r < n; ++r) {
      if (a[r][col] == 0) continue;
      long long f = (__int128)a[r][col] * inv % p;
      for (int j = 0; j < n; ++j) a[r][j] = ((a[r][j] - (__int128)f * a[col + 1][j]) % p + p) % p;
      for (int i = 0; i < n; ++i) a[i][col + 1] = (a[i][col + 1] + (__int128)f * a[i][r]) % p;
    }
  }

  // p_m = (lambda - H[m-1][m-1]) p_{m-1}
  //       - sum_i H[m-1-i][m-1] (prod_{j=m-i..m-1} H[j][j-1]) p_{m-1-i}
  std::vector<Row> polys(n + 1);
  polys[0] = {1};
  for (int m = 1; m <= n; ++m) {
    Row pm(m + 1, 0);
    const Row& prev = polys[m - 1];
    long long diag = a[m - 1][m - 1];
    for (int t = 0; t < m; ++t) {
      pm[t + 1] = (pm[t + 1] + prev[t]) % p;
      pm[t] = ((pm[t] - (__int128)diag * prev[t]) % p + p) % p;
    }
    long long sub_prod = 1;
    for (int i = 1; i < m; ++i) {
      sub_prod = (__int128)sub_prod * a[m - i][m - i - 1] % p;
      if (sub_prod == 0) break;
      long long coef = (__int128)a[m - 1 - i][m - 1] * sub_prod % p;
      if (coef == 0) continue;
      const Row& down = polys[m - 1 - i];
      for (int t = 0; t < m - i; ++t)
        pm[t] = ((pm[t] - (__int128)coef * down[t]) % p + p) % p;
    }
    polys[m] = std::move(pm);
  }
  return polys[n];
}

std::vector<long long> poly_roots(const Row& poly, long long p) {
  std::vector<long long> roots;
  for (long long x = 0; x < p; ++x) {
    long long v = 0;
    for (int i = static_cast<int>(poly.size()) - 1; i >= 0; --i)
      v = ((__int128)v * x + poly[i]) % p;
    if (v == 0) roots.push_back(x);
  }
  return roots;
}

// The class-sum matrix (M_i)[j][k] = a_{ijk}.
Mat class_matrix(const Group& G, int i) {
  const int k = G.num_classes();
  Mat m(k, Row(k, 0));
  for (int kidx = 0; kidx < k; ++kidx) {
    int z = G.classes()[kidx].representative;
    for (int x : G.classes()[i].members) m[G.class_of(G.mul(G.inv(x), z))][kidx] += 1;
  }
  return m;
}

long long find_modulus(long long order, long long exponent) {
  for (long long p = exponent + 1;; p += exponent) {
    if (p * p > 4 * order && is_prime(p)) return p;
  }
}

long long primitive_root_of_unity(long long e, long long p) {
  if (e == 1) return 1;
  auto qs = prime_factors(e);
  for (long long c = 2; c < p; ++c) {
    long long z = mod_pow(c, (p - 1) / e, p);
    if (z == 1) continue;
    bool primitive = true;
    for (long long q : qs)
      if (mod_pow(z, e / q, p) == 1) {
        primitive = false;
        break;
      }
    if (primitive) return z;
  }
  throw std::logic_error("no primitive root of unity found");
}

}  // namespace

std::vector<std::vector<std::vector<long long>>> class_mult_coeffs(const Group& G) {
  const int k = G.num_classes();
  std::vector<std::vector<std::vector<long long>>> a(
      k, std::vector<std::vector<long long>>(k, std::vector<long long>(k, 0)));
  for (int i = 0; i < k; ++i) {
    Mat m = class_matrix(G, i);
    for (int j = 0; j < k; ++j)
      for (int kk = 0; kk < k; ++kk) a[i][j][kk] = m[j][kk];
  }
  return a;
}

CharacterTable compute_character_table(const Group& G) {
  const int k = G.num_classes();
  const long long n = G.order();
  const CyclotomicField* field = &CyclotomicField::of(G.exponent());

  CharacterTable t;
  t.field = field;

  if (k == 1) {
    t.rows = {{Cyc::one(field)}};
    t.degrees = {1};
    return t;
  }

  const long long e = G.exponent();
  const long long p = find_modulus(n, e);

  // Simultaneous eigenspace splitting of the class-sum matrices.
  std::vector<Mat> spaces;
  {
    Mat full(k, Row(k, 0));
    for (int i = 0; i < k; ++i) full[i][i] = 1;
    spaces.push_back(std::move(full));
  }
  for (int i = 1; i < k; ++i) {
    bool all_split = true;
    for (const auto& s : spaces)
      if (s.size() > 1) {
        all_split = false;
        break;
      }
    if (all_split) break;

    Mat m = class_matrix(G, i);
    std::vector<Mat> next;
    for (auto& s : spaces) {
      const int d = static_cast<int>(s.size());
      if (d == 1) {
        next.push_back(std::move(s));
        continue;
      }
      Mat targets(d, Row(k, 0));
      for (int tgt = 0; tgt < d; ++tgt)
        for (int r = 0; r < k; ++r) {
          __int128 acc = 0;
          for (int c = 0; c < k; ++c) acc += (__int128)m[r][c] * s[tgt][c];
          targets[tgt][r] = static_cast<long long>(acc % p);
        }
      Mat restriction_t = coordinates_in_span(s, targets, p);
      // restriction_t[t][s]: coordinates of image of basis vector t; the
      // restriction matrix is its transpose.
      Mat restriction(d, Row(d, 0));
      for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) restriction[r][c] = restriction_t[c][r];

      auto roots = poly_roots(char_poly(restriction, p), p);
      int dims = 0;
      for (long long lambda : roots) {
        Mat shifted = restriction;
        for (int r = 0; r < d; ++r) shifted[r][r] = ((shifted[r][r] - lambda) % p + p) % p;
        Mat null_vecs = kernel_basis(std::move(shifted), p);
        if (null_vecs.empty()) continue;
        Mat sub;
        for (const auto& y : null_vecs) {
          Row v(k, 0);
          for (int tcoord = 0; tcoord < d; ++tcoord) {
            if (y[tcoord] == 0) continue;
            for (int c = 0; c < k; ++c)
              v[c] = (v[c] + (__int128)y[tcoord] * s[tcoord][c]) % p;
          }
          sub.push_back(std::move(v));
        }
        dims += static_cast<int>(sub.size());
        next.push_back(std::move(sub));
      }
      if (dims != d) throw std::logic_error("eigenspace split lost dimensions");
    }
    spaces = std::move(next);
  }
  if (static_cast<int>(spaces.size()) != k)
    throw std::logic_error("class matrices failed to separate characters");

  // Identity class is index 0 by the canonical class order.
  if (G.classes()[0].element_order != 1)
    throw std::logic_error("identity class is not first");

  const long long z = primitive_root_of_unity(e, p);
  std::vector<std::vector<int>> power_class(k);
  for (int j = 0; j < k; ++j) {
    const long long o = G.classes()[j].element_order;
    power_class[j].resize(static_cast<std::size_t>(o));
    int cur = G.identity();
    int rep = G.classes()[j].representative;
    for (long long s = 0; s < o; ++s) {
      power_class[j][static_cast<std::size_t>(s)] = G.class_of(cur);
      cur = G.mul(cur, rep);
    }
  }

  struct PendingRow {
    long long degree;
    std::vector<Cyc> values;
  };
  std::vector<PendingRow> pending;
  long long degree_sq_sum = 0;

  for (const auto& space : spaces) {
    const Row& raw = space[0];
    if (raw[0] % p == 0) throw std::logic_error("eigenvector has zero identity coordinate");
    long long norm = mod_inv(raw[0], p);
    Row omega(k);
    for (int j = 0; j < k; ++j) omega[j] = (__int128)raw[j] * norm % p;

    // 1/d^2 = (1/|G|) sum_j omega_j omega_j' / |C_j|
    long long s = 0;
    for (int j = 0; j < k; ++j) {
      long long term = (__int128)omega[j] * omega[G.inverse_class(j)] % p;
      term = (__int128)term * mod_inv(G.classes()[j].size % p, p) % p;
      s = (s + term) % p;
    }
    long long d2 = (__int128)(n % p) * mod_inv(s, p) % p;
    long long degree = 0;
    for (long long dd = 1; dd * dd <= n; ++dd)
      if ((__int128)dd * dd % p == d2) {
        degree = dd;
        break;
      }
    if (degree == 0) throw std::logic_error("character degree not recovered");
    degree_sq_sum += degree * degree;

    Row chi_p(k);
    for (int j = 0; j < k; ++j) {
      long long v = (__int128)(degree % p) * omega[j] % p;
      chi_p[j] = (__int128)v * mod_inv(G.classes()[j].size % p, p) % p;
    }

    // DFT lift: chi(g) = sum_t m_t zeta_o^t with m_t the eigenvalue
    // multiplicities, each in [0, degree].
    std::vector<Cyc> values;
    values.reserve(k);
    for (int j = 0; j < k; ++j) {
      const long long o = G.classes()[j].element_order;
      const long long mu = e / o;
      const long long zo_inv = mod_inv(mod_pow(z, mu, p), p);
      const long long o_inv = mod_inv(o % p, p);
      Cyc value = Cyc::zero(field);
      for (long long tt = 0; tt < o; ++tt) {
        long long acc = 0;
        long long w = mod_pow(zo_inv, tt, p);
        long long ws = 1;
        for (long long ss = 0; ss < o; ++ss) {
          acc = (acc + (__int128)chi_p[power_class[j][static_cast<std::size_t>(ss)]] * ws) % p;
          ws = (__int128)ws * w % p;
        }
        long long mult = (__int128)acc * o_inv % p;
        if (mult > degree)
          throw std::logic_error("eigenvalue multiplicity exceeds degree");
        if (mult != 0)
          value += Cyc::root_power(field, tt * mu).scaled(mult);
      }
      values.push_back(std::move(value));
    }
    if (values[0].integer_value() != degree)
      throw std::logic_error("lifted character disagrees with degree");
    pending.push_back({degree, std::move(values)});
  }

  if (degree_sq_sum != n)
    throw std::logic_error("degree squares do not sum to group order");

  std::sort(pending.begin(), pending.end(), [](const PendingRow& a, const PendingRow& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    return lex_less(a.values, b.values);
  });

  for (auto& r : pending) {
    t.degrees.push_back(r.degree);
    t.rows.push_back(std::move(r.values));
  }

  if (!verify_orthogonality(t, G))
    throw std::logic_error("computed character table fails orthogonality");
  return t;
}

int frobenius_schur(const CharacterTable& t, int row, const Group& G) {
  auto pm2 = G.power_map(2);
  Cyc sum = Cyc::zero(t.field);
  for (int c = 0; c < G.num_classes(); ++c)
    sum += t.rows[row][pm2[c]].scaled(G.classes()[c].size);
  auto v = sum.integer_value();
  if (!v || *v % G.order() != 0)
    throw std::logic_error("Frobenius-Schur indicator is not integral");
  long long ind = *v / G.order();
  if (ind < -1 || ind > 1)
    throw std::logic_error("Frobenius-Schur indicator outside {-1,0,1}");
  return static_cast<int>(ind);
}

bool verify_orthogonality(const CharacterTable& t, const Group& G) {
  const int k = G.num_classes();
  if (t.num_irreducibles() != k) return false;
  for (int i = 0; i < k; ++i) {
    for (int j = i; j < k; ++j) {
      Cyc sum = Cyc::zero(t.field);
      for (int c = 0; c < k; ++c)
        sum += (t.rows[i][c] * t.rows[j][c].conj()).scaled(G.classes()[c].size);
      auto v = sum.integer_value();
      if (!v || *v != (i == j ? G.order() : 0)) return false;
    }
  }
  for (int c = 0; c < k; ++c) {
    for (int c2 = c; c2 < k; ++c2) {
      Cyc sum = Cyc::zero(t.field);
      for (int i = 0; i < k; ++i) sum += t.rows[i][c] * t.rows[i][c2].conj();
      auto v = sum.integer_value();
      long long expect = c == c2 ? G.order() / G.classes()[c].size : 0;
      if (!v || *v != expect) return false;
    }
  }
  return true;
}

}  // namespace oliver
