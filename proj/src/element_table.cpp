#include "indres/element_table.hpp"

#include <algorithm>
#include <cstring>

#include "indres/errors.hpp"

namespace indres {

static constexpr std::uint32_t kEmpty = 0xffffffffu;

ElementTable::ElementTable(const PermGroup& g, std::uint64_t budget) : degree_(g.degree()) {
  if (g.order() > budget)
    throw ResourceError("group order " + g.order().get_str() + " exceeds enumeration budget");
  count_ = to_u64(g.order());
  data_.resize(count_ * degree_);
  std::size_t cap = 16;
  while (cap < 2 * count_) cap <<= 1;
  slots_.assign(cap, kEmpty);
  mask_ = cap - 1;
  std::size_t k = 0;
  g.for_each_element([&](PermView p) {
    std::copy(p.begin(), p.end(), data_.begin() + k * degree_);
    insert(static_cast<std::uint32_t>(k));
    ++k;
  });
  INDRES_ASSERT(k == count_, "enumeration count mismatch");
  inv_.resize(count_);
  std::vector<Point> buf(degree_);
  for (std::size_t i = 0; i < count_; ++i) {
    invert_into((*this)[i], buf.data());
    inv_[i] = index_of(buf);
  }
}

void ElementTable::insert(std::uint32_t idx) {
  std::uint64_t h = hash_perm((*this)[idx]) & mask_;
  while (slots_[h] != kEmpty) h = (h + 1) & mask_;
  slots_[h] = idx;
}

std::int64_t ElementTable::find(PermView p) const {
  if (p.size() != degree_) return -1;
  std::uint64_t h = hash_perm(p) & mask_;
  while (slots_[h] != kEmpty) {
    PermView q = (*this)[slots_[h]];
    if (std::equal(q.begin(), q.end(), p.begin())) return slots_[h];
    h = (h + 1) & mask_;
  }
  return -1;
}

std::uint32_t ElementTable::index_of(PermView p) const {
  std::int64_t i = find(p);
  if (i < 0) throw DomainError("permutation is not an element of the group");
  return static_cast<std::uint32_t>(i);
}

std::uint32_t ElementTable::multiply(std::uint32_t a, std::uint32_t b) const {
  thread_local std::vector<Point> buf;
  buf.resize(degree_);
  compose_into((*this)[a], (*this)[b], buf.data());
  return index_of(buf);
}

std::uint32_t ElementTable::power(std::uint32_t a, long long k) const {
  std::uint32_t base = k < 0 ? inv_[a] : a;
  unsigned long long e = k < 0 ? -static_cast<unsigned long long>(k) : k;
  std::uint32_t r = 0;
  while (e) {
    if (e & 1) r = multiply(r, base);
    e >>= 1;
    if (e) base = multiply(base, base);
  }
  return r;
}

std::uint32_t ElementTable::conjugate(std::uint32_t x, std::uint32_t g) const {
  return multiply(multiply(inv_[g], x), g);
}

std::uint32_t ElementTable::commutator(std::uint32_t a, std::uint32_t b) const {
  return multiply(multiply(inv_[a], inv_[b]), multiply(a, b));
}

std::uint64_t ElementTable::order_of(std::uint32_t a) const { return perm(a).order(); }

}  // namespace indres
