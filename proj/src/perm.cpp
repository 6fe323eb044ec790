#include "oliver/perm.hpp"

#include <cctype>
#include <numeric>
#include <stdexcept>

namespace oliver {

Perm::Perm(int degree) : images_(degree) {
  if (degree < 1) throw std::invalid_argument("permutation degree must be >= 1");
  std::iota(images_.begin(), images_.end(), 0);
}

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  if (images_.empty()) throw std::invalid_argument("permutation degree must be >= 1");
  std::vector<char> seen(images_.size(), 0);
  for (int v : images_) {
    if (v < 0 || v >= static_cast<int>(images_.size()) || seen[v])
      throw std::invalid_argument("image list is not a bijection");
    seen[v] = 1;
  }
}

Perm Perm::parse(std::string_view text, int degree) {
  if (degree < 1) throw std::invalid_argument("permutation degree must be >= 1");

  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };

  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(')
      throw std::invalid_argument("expected '(' in cycle notation");
    ++i;
    std::vector<int> cycle;
    std::vector<char> used(degree, 0);
    for (;;) {
      skip_ws();
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
        throw std::invalid_argument("expected point or ')' in cycle");
      int v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        ++i;
      }
      if (v < 1 || v > degree)
        throw std::invalid_argument("cycle point out of range: " + std::to_string(v));
      if (used[v - 1])
        throw std::invalid_argument("repeated point within one cycle: " + std::to_string(v));
      used[v - 1] = 1;
      cycle.push_back(v - 1);
      skip_ws();
      if (i < text.size() && text[i] == ',') ++i;
    }
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
    skip_ws();
  }

  // Right-to-left composition: the last written cycle acts first.
  Perm result(degree);
  for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
    std::vector<int> img(degree);
    std::iota(img.begin(), img.end(), 0);
    const auto& c = *it;
    for (std::size_t k = 0; k < c.size(); ++k)
      img[c[k]] = c[(k + 1) % c.size()];
    result = Perm(std::move(img)).compose(result);
  }
  return result;
}

Perm Perm::compose(const Perm& rhs) const {
  std::vector<int> img(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) img[x] = images_[rhs.images_[x]];
  Perm p;
  p.images_ = std::move(img);
  return p;
}

Perm Perm::inverse() const {
  std::vector<int> img(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) img[images_[x]] = static_cast<int>(x);
  Perm p;
  p.images_ = std::move(img);
  return p;
}

bool Perm::is_identity() const {
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] != static_cast<int>(x)) return false;
  return true;
}

long long Perm::order() const {
  // lcm of cycle lengths
  std::vector<char> seen(images_.size(), 0);
  long long ord = 1;
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (seen[x]) continue;
    long long len = 0;
    int cur = static_cast<int>(x);
    while (!seen[cur]) {
      seen[cur] = 1;
      cur = images_[cur];
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

std::string Perm::cycle_string() const {
  std::vector<char> seen(images_.size(), 0);
  std::string out;
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (seen[x] || images_[x] == static_cast<int>(x)) continue;
    out += '(';
    int cur = static_cast<int>(x);
    bool first = true;
    while (!seen[cur]) {
      seen[cur] = 1;
      if (!first) out += ',';
      out += std::to_string(cur + 1);
      first = false;
      cur = images_[cur];
    }
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

std::size_t PermHash::operator()(const Perm& p) const {
  std::uint64_t h = 1469598103934665603ULL;
  for (int v : p.images()) {
    h ^= static_cast<std::uint64_t>(v) + 1;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace oliver
