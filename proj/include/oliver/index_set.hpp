#ifndef OLIVER_INDEX_SET_HPP
#define OLIVER_INDEX_SET_HPP

#include <cstdint>
#include <cstddef>
#include <functional>
#include <vector>

namespace oliver {

/// Fixed-size bitset over element indices of a group. Subgroups, kernels and
/// closures are all sets of element indices in the group's canonical order.
class IndexSet {
public:
  IndexSet() = default;

  explicit IndexSet(int universe_size)
      : size_(universe_size), words_((universe_size + 63) / 64, 0) {}

  int universe_size() const { return size_; }

  void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

  int count() const {
    int c = 0;
    for (std::uint64_t w : words_) c += __builtin_popcountll(w);
    return c;
  }

  bool empty() const {
    for (std::uint64_t w : words_)
      if (w) return false;
    return true;
  }

  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(count());
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t w = words_[wi];
      while (w) {
        int b = __builtin_ctzll(w);
        out.push_back(static_cast<int>(wi * 64 + b));
        w &= w - 1;
      }
    }
    return out;
  }

  IndexSet operator&(const IndexSet& o) const {
    IndexSet r(size_);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & o.words_[i];
    return r;
  }

  IndexSet operator|(const IndexSet& o) const {
    IndexSet r(size_);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] | o.words_[i];
    return r;
  }

  bool subset_of(const IndexSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  bool operator==(const IndexSet& o) const {
    return size_ == o.size_ && words_ == o.words_;
  }

  /// Orders sets by their sorted member lists, compared lexicographically:
  /// the set containing the smallest non-shared index sorts first.
  bool lex_less(const IndexSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t diff = words_[i] ^ o.words_[i];
      if (diff) {
        std::uint64_t low = diff & (~diff + 1);
        return words_[i] & low;
      }
    }
    return false;
  }

  std::size_t hash() const {
    std::uint64_t h = 1469598103934665603ULL;
    for (std::uint64_t w : words_) {
      h ^= w;
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h ^ static_cast<std::uint64_t>(size_));
  }

private:
  int size_ = 0;
  std::vector<std::uint64_t> words_;
};

struct IndexSetHash {
  std::size_t operator()(const IndexSet& s) const { return s.hash(); }
};

}  // namespace oliver

#endif
