#include "oliver/group.hpp"

#include <algorithm>
#include <numeric>

namespace oliver {

namespace {
// Above this order the quadratic multiplication table is skipped and products
// fall back to composing permutations.
constexpr long long kMultTableLimit = 4096;
}  // namespace

Group Group::generate(std::vector<Perm> gens, long long cap) {
  if (gens.empty()) throw std::invalid_argument("need at least one generator");
  const int degree = gens[0].degree();
  for (const Perm& g : gens)
    if (g.degree() != degree)
      throw std::invalid_argument("generators must share a degree");

  // Breadth-first closure under right multiplication by generators.
  std::vector<Perm> elems;
  std::unordered_map<Perm, int, PermHash> seen;
  Perm id(degree);
  elems.push_back(id);
  seen.emplace(id, 0);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const Perm& g : gens) {
      Perm p = elems[i].compose(g);
      if (seen.emplace(p, static_cast<int>(elems.size())).second) {
        if (static_cast<long long>(elems.size()) >= cap)
          throw GroupTooLarge("group closure exceeds element cap " + std::to_string(cap));
        elems.push_back(std::move(p));
      }
    }
  }

  std::sort(elems.begin(), elems.end());

  Group G;
  G.degree_ = degree;
  G.generators_ = std::move(gens);
  G.elements_ = std::move(elems);
  G.build_tables();
  return G;
}

void Group::build_tables() {
  const int n = static_cast<int>(elements_.size());

  index_.clear();
  index_.reserve(elements_.size() * 2);
  for (int i = 0; i < n; ++i) index_.emplace(elements_[i], i);

  generator_indices_.clear();
  for (const Perm& g : generators_) generator_indices_.push_back(index_of(g));

  if (static_cast<long long>(n) <= kMultTableLimit) {
    mult_.assign(static_cast<std::size_t>(n) * n, 0);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        mult_[static_cast<std::size_t>(a) * n + b] = index_of(elements_[a].compose(elements_[b]));
  }

  inverse_.resize(n);
  element_order_.resize(n);
  exponent_ = 1;
  for (int i = 0; i < n; ++i) {
    inverse_[i] = index_of(elements_[i].inverse());
    element_order_[i] = elements_[i].order();
    exponent_ = std::lcm(exponent_, element_order_[i]);
  }

  // Conjugacy classes as orbits under conjugation by the generators.
  elem_class_.assign(n, -1);
  std::vector<ConjClass> classes;
  for (int x = 0; x < n; ++x) {
    if (elem_class_[x] != -1) continue;
    std::vector<int> orbit{x};
    elem_class_[x] = static_cast<int>(classes.size());
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (int g : generator_indices_) {
        int y = conj(g, orbit[i]);
        if (elem_class_[y] == -1) {
          elem_class_[y] = static_cast<int>(classes.size());
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    ConjClass c;
    c.representative = orbit[0];
    c.size = static_cast<long long>(orbit.size());
    c.element_order = element_order_[orbit[0]];
    c.members = std::move(orbit);
    classes.push_back(std::move(c));
  }

  std::sort(classes.begin(), classes.end(), [](const ConjClass& a, const ConjClass& b) {
    if (a.element_order != b.element_order) return a.element_order < b.element_order;
    if (a.size != b.size) return a.size < b.size;
    return a.members[0] < b.members[0];
  });
  classes_ = std::move(classes);
  for (int c = 0; c < static_cast<int>(classes_.size()); ++c)
    for (int m : classes_[c].members) elem_class_[m] = c;

  inverse_class_.resize(classes_.size());
  for (int c = 0; c < static_cast<int>(classes_.size()); ++c)
    inverse_class_[c] = elem_class_[inverse_[classes_[c].representative]];
}

int Group::index_of(const Perm& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) throw std::invalid_argument("permutation not in group");
  return it->second;
}

int Group::power(int a, long long k) const {
  int result = identity();
  int base = a;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

std::vector<int> Group::power_map(long long k) const {
  std::vector<int> pm(classes_.size());
  for (std::size_t c = 0; c < classes_.size(); ++c)
    pm[c] = elem_class_[power(classes_[c].representative, k)];
  return pm;
}

IndexSet Group::closure_impl(const std::vector<int>& seed) const {
  IndexSet in(static_cast<int>(elements_.size()));
  std::vector<int> list;
  list.reserve(64);
  in.set(identity());
  list.push_back(identity());
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (int s : seed) {
      int c = mul(list[i], s);
      if (!in.test(c)) {
        in.set(c);
        list.push_back(c);
      }
    }
  }
  return in;
}

IndexSet Group::closure(std::span<const int> seed) const {
  return closure_impl(std::vector<int>(seed.begin(), seed.end()));
}

IndexSet Group::square_closure() const {
  const int n = static_cast<int>(elements_.size());
  IndexSet squares(n);
  for (int g = 0; g < n; ++g) squares.set(mul(g, g));
  return closure_impl(squares.members());
}

}  // namespace oliver
