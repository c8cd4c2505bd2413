#include "indres/permutation.hpp"

#include <numeric>
#include <sstream>

#include "indres/errors.hpp"

namespace indres {

Permutation::Permutation(std::size_t degree) : img_(degree) {
  if (degree > 65535) throw ResourceError("degree above 65535");
  std::iota(img_.begin(), img_.end(), Point{0});
}

Permutation::Permutation(PermView images) : img_(images.begin(), images.end()) {}

Permutation Permutation::from_images(const std::vector<long long>& images, bool one_based) {
  const std::size_t n = images.size();
  if (n > 65535) throw ResourceError("degree above 65535");
  std::vector<char> seen(n, 0);
  Permutation p;
  p.img_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    long long v = images[i] - (one_based ? 1 : 0);
    if (v < 0 || v >= static_cast<long long>(n) || seen[v])
      throw FormatError("image list is not a permutation");
    seen[v] = 1;
    p.img_[i] = static_cast<Point>(v);
  }
  return p;
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<int>>& cycles_one_based) {
  std::vector<long long> img(degree);
  std::iota(img.begin(), img.end(), 0LL);
  std::vector<char> used(degree, 0);
  for (const auto& c : cycles_one_based) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      int a = c[i] - 1, b = c[(i + 1) % c.size()] - 1;
      if (a < 0 || a >= static_cast<int>(degree) || used[a]) throw FormatError("bad cycle");
      used[a] = 1;
      img[a] = b;
    }
  }
  return from_images(img, false);
}

std::vector<long long> Permutation::one_based() const {
  std::vector<long long> r(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) r[i] = img_[i] + 1;
  return r;
}

void compose_into(PermView a, PermView b, Point* out) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) out[i] = b[a[i]];
}

void invert_into(PermView a, Point* out) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) out[a[i]] = static_cast<Point>(i);
}

std::uint64_t hash_perm(PermView a) {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ a.size();
  for (Point x : a) {
    h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 0xff51afd7ed558ccdULL;
  }
  return h ^ (h >> 33);
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (rhs.degree() != degree()) throw DomainError("degree mismatch in product");
  Permutation r;
  r.img_.resize(degree());
  compose_into(img_, rhs.img_, r.img_.data());
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.img_.resize(degree());
  invert_into(img_, r.img_.data());
  return r;
}

Permutation Permutation::pow(long long k) const {
  Permutation base = k < 0 ? inverse() : *this;
  unsigned long long e = k < 0 ? -static_cast<unsigned long long>(k) : k;
  Permutation r(degree());
  while (e) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

Permutation Permutation::conjugate_by(const Permutation& g) const { return g.inverse() * *this * g; }

std::uint64_t Permutation::order() const {
  std::uint64_t o = 1;
  for (const auto& c : cycles()) o = std::lcm(o, static_cast<std::uint64_t>(c.size()));
  return o;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(degree(), 0);
  for (std::size_t i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    std::vector<int> c;
    for (std::size_t j = i; !seen[j]; j = img_[j]) {
      seen[j] = 1;
      c.push_back(static_cast<int>(j));
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  bool any = false;
  for (const auto& c : cycles()) {
    if (c.size() < 2) continue;
    any = true;
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i] + 1;
    os << ')';
  }
  if (!any) os << "()";
  return os.str();
}

}  // namespace indres
