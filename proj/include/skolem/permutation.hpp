#pragma once

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace skolem {

// Permutation of {1..n}, stored as its image table.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<char> seen(images_.size() + 1, 0);
    for (int v : images_) {
      if (v < 1 || v > static_cast<int>(images_.size()) || seen[v])
        throw std::invalid_argument("Permutation: image table is not a bijection on {1..n}");
      seen[v] = 1;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    return Permutation(std::move(images));
  }

  int size() const { return static_cast<int>(images_.size()); }
  const std::vector<int>& images() const { return images_; }

  int operator()(int i) const {
    if (i < 1 || i > size()) throw std::invalid_argument("Permutation: argument out of range");
    return images_[static_cast<std::size_t>(i) - 1];
  }

  Permutation inverse() const {
    std::vector<int> inv(images_.size());
    for (int i = 1; i <= size(); ++i) inv[static_cast<std::size_t>(images_[i - 1]) - 1] = i;
    return Permutation(std::move(inv));
  }

  // (*this) applied after `inner`.
  Permutation after(const Permutation& inner) const {
    if (inner.size() != size()) throw std::invalid_argument("Permutation: size mismatch in composition");
    std::vector<int> images(images_.size());
    for (int i = 1; i <= size(); ++i) images[i - 1] = (*this)(inner(i));
    return Permutation(std::move(images));
  }

  bool is_identity() const {
    for (int i = 1; i <= size(); ++i)
      if (images_[i - 1] != i) return false;
    return true;
  }

  bool is_involution() const { return after(*this).is_identity(); }

  int fixed_points() const {
    int count = 0;
    for (int i = 1; i <= size(); ++i) count += images_[i - 1] == i;
    return count;
  }

  // Nontrivial cycles, each starting at its minimum, ordered by that minimum.
  std::vector<std::vector<int>> cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(images_.size() + 1, 0);
    for (int i = 1; i <= size(); ++i) {
      if (seen[i] || images_[i - 1] == i) continue;
      std::vector<int> cycle;
      int j = i;
      while (!seen[j]) {
        seen[j] = 1;
        cycle.push_back(j);
        j = images_[j - 1];
      }
      out.push_back(std::move(cycle));
    }
    return out;
  }

  std::string cycle_string() const {
    const auto cs = cycles();
    if (cs.empty()) return "()";
    std::string out;
    for (const auto& cycle : cs) {
      out += '(';
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(cycle[i]);
      }
      out += ')';
    }
    return out;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

}  // namespace skolem
