#include "oliver/namedgroups.hpp"

#include <cctype>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace oliver {

namespace {

std::vector<int> identity_images(int degree) {
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  return img;
}

std::vector<Perm> cyclic_gens(int n) {
  if (n < 1) throw std::invalid_argument("C<n> needs n >= 1");
  if (n == 1) return {Perm(1)};
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = (i + 1) % n;
  return {Perm(img)};
}

std::vector<Perm> symmetric_gens(int n) {
  if (n < 1) throw std::invalid_argument("S<n> needs n >= 1");
  if (n == 1) return {Perm(1)};
  std::vector<int> cyc(n);
  for (int i = 0; i < n; ++i) cyc[i] = (i + 1) % n;
  std::vector<int> swap01 = identity_images(n);
  std::swap(swap01[0], swap01[1]);
  if (n == 2) return {Perm(swap01)};
  return {Perm(cyc), Perm(swap01)};
}

std::vector<Perm> alternating_gens(int n) {
  if (n < 1) throw std::invalid_argument("A<n> needs n >= 1");
  if (n <= 2) return {Perm(std::max(n, 1))};
  std::vector<int> three = identity_images(n);
  three[0] = 1;
  three[1] = 2;
  three[2] = 0;
  if (n == 3) return {Perm(three)};
  std::vector<int> big = identity_images(n);
  if (n % 2 == 1) {
    for (int i = 0; i < n; ++i) big[i] = (i + 1) % n;  // (1..n)
  } else {
    for (int i = 1; i < n; ++i) big[i] = i % (n - 1) + 1;  // (2..n)
  }
  return {Perm(three), Perm(big)};
}

std::vector<Perm> dihedral_gens(int order) {
  if (order < 2 || order % 2 != 0)
    throw std::invalid_argument("D<m> needs an even order m >= 2");
  int n = order / 2;
  if (n == 1) return {Perm(std::vector<int>{1, 0})};
  if (n == 2) return {Perm::parse("(1,2)", 4), Perm::parse("(3,4)", 4)};
  std::vector<int> rot(n), refl(n);
  for (int i = 0; i < n; ++i) rot[i] = (i + 1) % n;
  refl[0] = 0;
  for (int i = 1; i < n; ++i) refl[i] = n - i;  // fixes point 1
  return {Perm(rot), Perm(refl)};
}

// Matrix group acting on the nonzero vectors of F_q^dim, enumerated in
// lexicographic order.
std::vector<Perm> matrix_group_gens(int dim, int q,
                                    const std::vector<std::vector<std::vector<int>>>& mats) {
  std::vector<std::vector<int>> vectors;
  std::vector<int> v(dim, 0);
  for (;;) {
    int i = dim - 1;
    while (i >= 0 && v[i] == q - 1) v[i--] = 0;
    if (i < 0) break;
    ++v[i];
    vectors.push_back(v);
  }
  auto vec_index = [&](const std::vector<int>& w) {
    long long idx = 0;
    for (int c : w) idx = idx * q + c;
    return static_cast<int>(idx - 1);  // lexicographic rank among nonzero vectors
  };
  std::vector<Perm> gens;
  for (const auto& m : mats) {
    std::vector<int> img(vectors.size());
    for (std::size_t i = 0; i < vectors.size(); ++i) {
      std::vector<int> w(dim, 0);
      for (int r = 0; r < dim; ++r) {
        long long acc = 0;
        for (int c = 0; c < dim; ++c) acc += static_cast<long long>(m[r][c]) * vectors[i][c];
        w[r] = static_cast<int>(acc % q);
      }
      img[vec_index(vectors[i])] = vec_index(w);
    }
    gens.push_back(Perm(img));
  }
  return gens;
}

std::vector<Perm> special_linear_gens(int q) {
  // elementary and rotation generators of SL(2,q)
  return matrix_group_gens(2, q,
                           {{{1, 1}, {0, 1}}, {{0, q - 1}, {1, 0}}});
}

std::vector<Perm> atom_generators(std::string_view name) {
  if (name == "SL(2,3)") return special_linear_gens(3);
  if (name == "SL(2,5)") return special_linear_gens(5);
  if (name == "GL(2,3)")
    return matrix_group_gens(2, 3, {{{1, 1}, {0, 1}}, {{0, 2}, {1, 0}}, {{2, 0}, {0, 1}}});
  if (name == "GL(3,2)")
    return matrix_group_gens(
        3, 2, {{{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}, {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}});
  if (name.size() >= 2 && (name[0] == 'C' || name[0] == 'S' || name[0] == 'A' || name[0] == 'D')) {
    int n = 0;
    for (std::size_t i = 1; i < name.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(name[i])))
        throw std::invalid_argument("unknown group name: " + std::string(name));
      n = n * 10 + (name[i] - '0');
    }
    if (n == 0) throw std::invalid_argument("unknown group name: " + std::string(name));
    switch (name[0]) {
      case 'C': return cyclic_gens(n);
      case 'S': return symmetric_gens(n);
      case 'A': return alternating_gens(n);
      case 'D': return dihedral_gens(n);
    }
  }
  throw std::invalid_argument("unknown group name: " + std::string(name));
}

// Splits on 'x' separators, keeping parenthesised atoms intact.
std::vector<std::string> split_product(std::string_view spec) {
  std::vector<std::string> parts;
  std::string cur;
  int depth = 0;
  for (char ch : spec) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == 'x' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  for (auto& p : parts)
    if (p.empty()) throw std::invalid_argument("empty factor in product spec");
  return parts;
}

}  // namespace

std::vector<Perm> group_spec_generators(std::string_view spec) {
  if (spec.empty()) throw std::invalid_argument("empty group spec");
  if (spec[0] == '@') return read_generator_file(std::string(spec.substr(1)));

  std::vector<std::vector<Perm>> factor_gens;
  std::vector<int> degrees;
  for (const auto& part : split_product(spec)) {
    auto gens = atom_generators(part);
    degrees.push_back(gens[0].degree());
    factor_gens.push_back(std::move(gens));
  }
  const int total_degree = std::accumulate(degrees.begin(), degrees.end(), 0);

  // direct product on disjoint point sets
  std::vector<Perm> gens;
  int offset = 0;
  for (std::size_t f = 0; f < factor_gens.size(); ++f) {
    for (const Perm& g : factor_gens[f]) {
      std::vector<int> img = identity_images(total_degree);
      for (int i = 0; i < degrees[f]; ++i) img[offset + i] = offset + g.apply(i);
      gens.push_back(Perm(img));
    }
    offset += degrees[f];
  }
  return gens;
}

Group parse_group_spec(std::string_view spec, long long cap) {
  return Group::generate(group_spec_generators(spec), cap);
}

std::vector<Perm> read_generator_file(std::istream& in) {
  std::string line;
  int degree = -1;
  std::vector<Perm> gens;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    if (key == "degree:") {
      if (!(ls >> degree) || degree < 1)
        throw std::invalid_argument("generator file: bad degree line");
    } else if (key == "gen:") {
      if (degree < 1)
        throw std::invalid_argument("generator file: degree must come first");
      std::string rest;
      std::getline(ls, rest);
      gens.push_back(Perm::parse(rest, degree));
    } else {
      throw std::invalid_argument("generator file: unexpected line: " + line);
    }
  }
  if (degree < 1) throw std::invalid_argument("generator file: missing degree");
  if (gens.empty()) gens.push_back(Perm(degree));
  return gens;
}

std::vector<Perm> read_generator_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open generator file: " + path);
  return read_generator_file(in);
}

}  // namespace oliver
