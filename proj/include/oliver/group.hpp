#ifndef OLIVER_GROUP_HPP
#define OLIVER_GROUP_HPP

#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "oliver/index_set.hpp"
#include "oliver/perm.hpp"

namespace oliver {

inline constexpr long long kDefaultElementCap = 20000;

struct GroupTooLarge : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConjClass {
  int representative = 0;     // element index
  long long size = 0;
  long long element_order = 0;
  std::vector<int> members;   // ascending element indices
};

/// A finite permutation group with its full element list in canonical order
/// (lexicographic on image sequences; index 0 is always the identity).
class Group {
public:
  /// Closure of the generators. Throws GroupTooLarge past the element cap.
  static Group generate(std::vector<Perm> gens, long long cap = kDefaultElementCap);

  int degree() const { return degree_; }
  long long order() const { return static_cast<long long>(elements_.size()); }
  long long exponent() const { return exponent_; }
  const std::vector<Perm>& elements() const { return elements_; }
  const std::vector<Perm>& generators() const { return generators_; }
  const std::vector<int>& generator_indices() const { return generator_indices_; }

  int identity() const { return 0; }

  int mul(int a, int b) const {
    if (!mult_.empty()) return mult_[static_cast<std::size_t>(a) * elements_.size() + b];
    return index_of(elements_[a].compose(elements_[b]));
  }
  int inv(int a) const { return inverse_[a]; }
  int conj(int g, int x) const { return mul(mul(g, x), inverse_[g]); }

  long long element_order(int a) const { return element_order_[a]; }

  /// Index of a permutation in the canonical element list; throws if absent.
  int index_of(const Perm& p) const;
  bool contains(const Perm& p) const { return index_.find(p) != index_.end(); }

  const std::vector<ConjClass>& classes() const { return classes_; }
  int class_of(int elem) const { return elem_class_[elem]; }
  int num_classes() const { return static_cast<int>(classes_.size()); }
  int inverse_class(int c) const { return inverse_class_[c]; }

  /// a^k for k >= 0.
  int power(int a, long long k) const;

  /// Class index of representative^k; independent of representative choice.
  std::vector<int> power_map(long long k) const;

  /// Smallest subgroup containing the seed elements, as an index set.
  IndexSet closure(std::span<const int> seed) const;
  IndexSet closure(const IndexSet& seed) const { return closure_impl(seed.members()); }

  /// Subgroup generated by all squares; equals the intersection of all
  /// index-2 subgroups (the whole group when there are none).
  IndexSet square_closure() const;

private:
  IndexSet closure_impl(const std::vector<int>& seed) const;
  void build_tables();

  int degree_ = 0;
  long long exponent_ = 1;
  std::vector<Perm> elements_;
  std::vector<Perm> generators_;
  std::vector<int> generator_indices_;
  std::unordered_map<Perm, int, PermHash> index_;
  std::vector<int> inverse_;
  std::vector<long long> element_order_;
  std::vector<int> mult_;  // flat order x order table; empty above the size limit
  std::vector<ConjClass> classes_;
  std::vector<int> elem_class_;
  std::vector<int> inverse_class_;
};

}  // namespace oliver

#endif
