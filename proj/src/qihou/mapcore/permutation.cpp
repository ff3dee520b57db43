#include "qihou/mapcore/permutation.hpp"

#include <stdexcept>

namespace qihou {

Permutation::Permutation(std::vector<std::uint32_t> image) : image_(std::move(image)) {
  if (image_.empty()) throw std::invalid_argument("Permutation: empty image");
  std::vector<bool> seen(image_.size(), false);
  for (std::uint32_t v : image_) {
    if (v >= image_.size() || seen[v])
      throw std::invalid_argument("Permutation: image is not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::uint32_t> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<std::uint32_t>(i);
  return Permutation(std::move(img));
}

Permutation Permutation::from_one_based(const std::vector<std::uint32_t>& image_one_based) {
  std::vector<std::uint32_t> img(image_one_based.size());
  for (std::size_t i = 0; i < img.size(); ++i) {
    if (image_one_based[i] == 0)
      throw std::invalid_argument("Permutation: one-based image contains 0");
    img[i] = image_one_based[i] - 1;
  }
  return Permutation(std::move(img));
}

Permutation Permutation::shift(std::size_t n, std::size_t k) {
  std::vector<std::uint32_t> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<std::uint32_t>((i + k) % n);
  return Permutation(std::move(img));
}

std::vector<std::uint32_t> Permutation::one_based_image() const {
  std::vector<std::uint32_t> img(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) img[i] = image_[i] + 1;
  return img;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> img(image_.size());
  for (std::uint32_t i = 0; i < image_.size(); ++i) img[image_[i]] = i;
  return Permutation(std::move(img));
}

Permutation Permutation::compose(const Permutation& o) const {
  if (size() != o.size()) throw std::invalid_argument("Permutation: size mismatch");
  std::vector<std::uint32_t> img(image_.size());
  for (std::uint32_t i = 0; i < image_.size(); ++i) img[i] = image_[o.image_[i]];
  return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
  for (std::uint32_t i = 0; i < image_.size(); ++i)
    if (image_[i] != i) return false;
  return true;
}

}  // namespace qihou
