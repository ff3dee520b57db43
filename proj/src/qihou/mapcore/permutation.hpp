#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace qihou {

/// Bijection on {0, ..., n-1} stored as its image array.
/// One-based views are provided for the conventional subscript notation.
class Permutation {
 public:
  /// image[i] is the image of i (0-based). Throws unless a bijection.
  explicit Permutation(std::vector<std::uint32_t> image);

  static Permutation identity(std::size_t n);
  /// image_one_based[i-1] is the 1-based image of i.
  static Permutation from_one_based(const std::vector<std::uint32_t>& image_one_based);
  /// The cyclic shift i -> i + k (mod n), 0-based.
  static Permutation shift(std::size_t n, std::size_t k);

  std::size_t size() const { return image_.size(); }
  std::uint32_t apply(std::uint32_t i) const { return image_.at(i); }
  std::uint32_t operator()(std::uint32_t i) const { return image_.at(i); }

  std::vector<std::uint32_t> one_based_image() const;

  Permutation inverse() const;
  /// (this ∘ o)(i) = this(o(i)).
  Permutation compose(const Permutation& o) const;

  bool is_identity() const;
  bool operator==(const Permutation& o) const { return image_ == o.image_; }
  bool operator!=(const Permutation& o) const { return image_ != o.image_; }

 private:
  std::vector<std::uint32_t> image_;
};

}  // namespace qihou
