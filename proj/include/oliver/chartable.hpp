#ifndef OLIVER_CHARTABLE_HPP
#define OLIVER_CHARTABLE_HPP

#include <memory>
#include <vector>

#include "oliver/cyclotomic.hpp"
#include "oliver/group.hpp"

namespace oliver {

struct CharacterTable {
  const CyclotomicField* field = nullptr;
  std::vector<std::vector<Cyc>> rows;  // irreducibles x conjugacy classes
  std::vector<long long> degrees;

  int num_irreducibles() const { return static_cast<int>(rows.size()); }
};

/// a[i][j][k] = #{(x,y) in C_i x C_j : xy = z} for a fixed z in C_k;
/// independent of the chosen z.
std::vector<std::vector<std::vector<long long>>> class_mult_coeffs(const Group& G);

/// Exact complex irreducible character table via eigenvector splitting of the
/// class-multiplication matrices modulo a prime p = 1 (mod exponent),
/// p > 2*sqrt(|G|), lifted to cyclotomic integers by a discrete Fourier
/// transform over power maps. Deterministic row order (degree, value tuple).
/// Throws std::logic_error on any internal consistency failure.
CharacterTable compute_character_table(const Group& G);

/// Frobenius-Schur indicator (1/|G|) sum chi(g^2), exact; in {-1, 0, 1}.
int frobenius_schur(const CharacterTable& t, int row, const Group& G);

/// Exact row and column orthogonality.
bool verify_orthogonality(const CharacterTable& t, const Group& G);

}  // namespace oliver

#endif
