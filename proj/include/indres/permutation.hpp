#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace indres {

using Point = std::uint16_t;
using PermView = std::span<const Point>;

// Permutation of {0..n-1}. Composition a * b applies a first, then b, so
// that x^(ab) = (x^a)^b.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::size_t degree);
  explicit Permutation(PermView images);

  static Permutation from_images(const std::vector<long long>& images, bool one_based);
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<int>>& cycles_one_based);

  std::size_t degree() const { return img_.size(); }
  Point operator[](std::size_t i) const { return img_[i]; }
  PermView images() const { return img_; }
  std::vector<long long> one_based() const;

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  Permutation pow(long long k) const;
  Permutation conjugate_by(const Permutation& g) const;  // g^-1 * this * g

  std::uint64_t order() const;
  bool is_identity() const;
  std::vector<std::vector<int>> cycles() const;
  std::string to_string() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<Point> img_;
};

void compose_into(PermView a, PermView b, Point* out);
void invert_into(PermView a, Point* out);
std::uint64_t hash_perm(PermView a);

}  // namespace indres
