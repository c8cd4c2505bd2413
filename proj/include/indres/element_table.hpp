#pragma once

#include <cstdint>
#include <vector>

#include "indres/perm_group.hpp"

namespace indres {

constexpr std::uint64_t kDefaultOrderBudget = 10'000'000;

// Explicit list of all elements of a permutation group with a hash index.
// Element 0 is the identity.
class ElementTable {
 public:
  ElementTable(const PermGroup& g, std::uint64_t budget = kDefaultOrderBudget);

  std::size_t size() const { return count_; }
  std::size_t degree() const { return degree_; }
  PermView operator[](std::size_t i) const { return {data_.data() + i * degree_, degree_}; }
  Permutation perm(std::size_t i) const { return Permutation((*this)[i]); }

  std::int64_t find(PermView p) const;
  std::uint32_t index_of(PermView p) const;  // throws if absent
  std::uint32_t multiply(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inverse(std::uint32_t a) const { return inv_[a]; }
  std::uint32_t power(std::uint32_t a, long long k) const;
  std::uint32_t conjugate(std::uint32_t x, std::uint32_t g) const;  // g^-1 x g
  std::uint32_t commutator(std::uint32_t a, std::uint32_t b) const;  // a^-1 b^-1 a b
  std::uint64_t order_of(std::uint32_t a) const;

 private:
  void insert(std::uint32_t idx);

  std::size_t degree_ = 0;
  std::size_t count_ = 0;
  std::vector<Point> data_;
  std::vector<std::uint32_t> slots_;
  std::uint64_t mask_ = 0;
  std::vector<std::uint32_t> inv_;
};

}  // namespace indres
