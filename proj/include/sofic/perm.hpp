#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "sofic/error.hpp"

namespace sofic {

/// Permutation of [0, n) in image notation: p[i] is the image of i.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
    std::vector<char> hit(images_.size(), 0);
    for (auto v : images_) {
      if (v >= images_.size() || hit[v])
        throw Error(ErrorKind::malformed_input, "image array of length " + std::to_string(images_.size()) +
                                                    " is not a bijection");
      hit[v] = 1;
    }
  }

  static Permutation identity(std::size_t n) {
    Permutation p;
    p.images_.resize(n);
    std::iota(p.images_.begin(), p.images_.end(), 0u);
    return p;
  }

  std::size_t size() const { return images_.size(); }
  std::uint32_t operator[](std::size_t i) const { return images_[i]; }
  const std::vector<std::uint32_t>& images() const { return images_; }

  /// (*this ∘ q)(i) = (*this)[q[i]]
  Permutation compose(const Permutation& q) const {
    if (q.size() != size()) throw Error(ErrorKind::size_mismatch, "composing permutations of different degree");
    Permutation r;
    r.images_.resize(size());
    for (std::size_t i = 0; i < size(); ++i) r.images_[i] = images_[q.images_[i]];
    return r;
  }

  Permutation inverse() const {
    Permutation r;
    r.images_.resize(size());
    for (std::size_t i = 0; i < size(); ++i) r.images_[images_[i]] = static_cast<std::uint32_t>(i);
    return r;
  }

  bool is_identity() const {
    for (std::size_t i = 0; i < size(); ++i)
      if (images_[i] != i) return false;
    return true;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint32_t> images_;
};

}  // namespace sofic
