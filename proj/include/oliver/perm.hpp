#ifndef OLIVER_PERM_HPP
#define OLIVER_PERM_HPP

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace oliver {

/// Permutation on {1..degree}, stored as 0-based image list.
/// Composition convention throughout: (a * b)(x) = a(b(x)), i.e. b acts first.
class Perm {
public:
  Perm() = default;

  /// Identity of the given degree.
  explicit Perm(int degree);

  /// Takes 0-based images; throws std::invalid_argument if not a bijection.
  explicit Perm(std::vector<int> images);

  /// Parses cycle notation with 1-based points, e.g. "(1,5,2,4,3)(6,8,7)".
  /// Separators may be commas or spaces. Cycles need not be disjoint and are
  /// composed right to left. "()" is the identity.
  static Perm parse(std::string_view text, int degree);

  int degree() const { return static_cast<int>(images_.size()); }
  int apply(int p) const { return images_[p]; }
  const std::vector<int>& images() const { return images_; }

  Perm compose(const Perm& rhs) const;  // (*this)(rhs(x))
  Perm inverse() const;
  bool is_identity() const;
  long long order() const;

  /// Cycle notation on 1-based points; fixed points omitted, identity is "()".
  std::string cycle_string() const;

  bool operator==(const Perm& o) const { return images_ == o.images_; }
  std::strong_ordering operator<=>(const Perm& o) const {
    return images_ <=> o.images_;
  }

private:
  std::vector<int> images_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const;
};

}  // namespace oliver

#endif
