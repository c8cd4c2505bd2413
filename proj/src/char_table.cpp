#include "indres/char_table.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>
#include <unordered_map>

#include "indres/errors.hpp"
#include "indres/finite_group.hpp"

namespace indres {

Embedding Embedding::for_exponent(std::uint64_t e) {
  std::uint64_t q = prime_one_mod(e, 1ULL << 61);
  ModPrime f{q};
  std::uint64_t w = root_of_unity(q, e);
  return {f, e, w};
}

std::uint64_t Embedding::map(const Cyclotomic& v) const {
  auto reduce = [&](const BigInt& c) -> std::uint64_t {
    return mpz_fdiv_ui(c.get_mpz_t(), static_cast<unsigned long>(f.q));
  };
  if (v.is_rational()) return reduce(v.rational_part());
  if (e % v.modulus()) throw DomainError("value modulus does not divide embedding exponent");
  std::uint64_t z = f.pow(w, e / v.modulus()), zk = 1, acc = 0;
  for (const auto& c : v.coeffs()) {
    if (c != 0) acc = f.add(acc, f.mul(reduce(c), zk));
    zk = f.mul(zk, z);
  }
  return acc;
}

CharTable::CharTable(std::string id, std::uint64_t order, std::vector<ClassInfo> classes,
                     std::vector<std::vector<Cyclotomic>> irr)
    : id_(std::move(id)), order_(order), classes_(std::move(classes)), irr_(std::move(irr)) {
  derive();
}

void CharTable::derive() {
  const std::size_t r = classes_.size();
  if (irr_.size() != r) throw IntegrityError("number of irreducibles differs from number of classes");
  for (const auto& row : irr_)
    if (row.size() != r) throw FormatError("character row has wrong length");
  exponent_ = 1;
  std::uint64_t emb = 1;
  for (std::size_t c = 0; c < r; ++c) {
    if (classes_[c].rep_order == 0 || classes_[c].size == 0) throw FormatError("bad class data");
    exponent_ = std::lcm(exponent_, classes_[c].rep_order);
    for (auto& row : irr_) {
      if (row[c].modulus() != classes_[c].rep_order && classes_[c].rep_order % row[c].modulus() == 0)
        row[c] = row[c].lift(classes_[c].rep_order);
      emb = std::lcm(emb, row[c].modulus());
    }
  }
  emb = std::lcm(emb, exponent_);
  Embedding E = Embedding::for_exponent(emb);
  Embedding Ec = E;
  Ec.w = E.f.inv(E.w);  // complex conjugation
  std::vector<std::vector<std::uint64_t>> img(r, std::vector<std::uint64_t>(r)), cimg = img;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t c = 0; c < r; ++c) {
      img[i][c] = E.map(irr_[i][c]);
      cimg[i][c] = Ec.map(irr_[i][c]);
    }
  auto key_hash = [](const std::vector<std::uint64_t>& v) {
    std::uint64_t h = 0;
    for (auto x : v) h = (h ^ x) * 0x100000001b3ULL + 7;
    return h;
  };
  // columns
  std::unordered_multimap<std::uint64_t, std::size_t> cols;
  auto column = [&](const std::vector<std::vector<std::uint64_t>>& m, std::size_t c) {
    std::vector<std::uint64_t> v(r);
    for (std::size_t i = 0; i < r; ++i) v[i] = m[i][c];
    return v;
  };
  for (std::size_t c = 0; c < r; ++c) cols.emplace(key_hash(column(img, c)), c);
  inverse_.assign(r, -1);
  for (std::size_t c = 0; c < r; ++c) {
    auto v = column(cimg, c);
    auto [lo, hi] = cols.equal_range(key_hash(v));
    for (auto it = lo; it != hi; ++it)
      if (column(img, it->second) == v) inverse_[c] = static_cast<int>(it->second);
    if (inverse_[c] < 0) throw IntegrityError("no inverse class matches conjugate column");
  }
  std::unordered_multimap<std::uint64_t, std::size_t> rows;
  for (std::size_t i = 0; i < r; ++i) rows.emplace(key_hash(img[i]), i);
  dual_.assign(r, -1);
  for (std::size_t i = 0; i < r; ++i) {
    auto [lo, hi] = rows.equal_range(key_hash(cimg[i]));
    for (auto it = lo; it != hi; ++it)
      if (img[it->second] == cimg[i]) dual_[i] = static_cast<int>(it->second);
    if (dual_[i] < 0) throw IntegrityError("complex conjugate of a character is not in the table");
  }
}

std::vector<std::vector<std::uint64_t>> CharTable::image(const ModPrime& f, std::uint64_t w,
                                                         std::uint64_t e) const {
  Embedding E{f, e, w};
  std::vector<std::vector<std::uint64_t>> out(num_irr(), std::vector<std::uint64_t>(num_classes()));
  for (std::size_t i = 0; i < num_irr(); ++i)
    for (std::size_t c = 0; c < num_classes(); ++c) out[i][c] = E.map(irr_[i][c]);
  return out;
}

void CharTable::verify() const {
  const std::size_t r = classes_.size();
  BigInt total = 0, ord = static_cast<unsigned long>(order_);
  BigInt class_total = 0;
  for (const auto& c : classes_) class_total += static_cast<unsigned long>(c.size);
  if (class_total != ord) throw IntegrityError("class sizes do not sum to the group order");
  for (std::size_t i = 0; i < r; ++i) {
    if (!irr_[i][0].is_rational() || irr_[i][0].rational_part() <= 0)
      throw IntegrityError("character degree is not a positive integer");
    total += irr_[i][0].rational_part() * irr_[i][0].rational_part();
  }
  if (total != ord) throw IntegrityError("sum of squared degrees differs from the group order");
  // Row relation: partial sums over classes of one element order are
  // rational, since that set of classes is closed under Galois action.
  std::map<std::uint64_t, std::vector<std::size_t>> by_order;
  for (std::size_t c = 0; c < r; ++c) by_order[classes_[c].rep_order].push_back(c);
  std::vector<std::vector<Cyclotomic>> conj(r, std::vector<Cyclotomic>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t c = 0; c < r; ++c) conj[i][c] = irr_[i][c].conj();
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i; j < r; ++j) {
      BigInt s = 0;
      for (const auto& [o, cs] : by_order) {
        Cyclotomic part(1);
        for (auto c : cs) part += irr_[i][c] * conj[j][c] * BigInt(static_cast<unsigned long>(classes_[c].size));
        if (!part.is_rational()) throw IntegrityError("row orthogonality: non-rational partial sum");
        s += part.rational_part();
      }
      if (s != (i == j ? ord : BigInt(0)))
        throw IntegrityError("row orthogonality fails for characters " + std::to_string(i) + "," +
                             std::to_string(j));
    }
  for (std::size_t c = 0; c < r; ++c)
    for (std::size_t d = c; d < r; ++d) {
      Cyclotomic s(1);
      for (std::size_t i = 0; i < r; ++i) s += irr_[i][c] * conj[i][d];
      BigInt want = c == d ? BigInt(static_cast<unsigned long>(order_ / classes_[c].size)) : BigInt(0);
      if (!s.is_rational() || s.rational_part() != want)
        throw IntegrityError("column orthogonality fails for classes " + std::to_string(c) + "," +
                             std::to_string(d));
    }
}

namespace {

struct Space {
  std::vector<std::vector<std::uint64_t>> rows;  // reduced row echelon
  std::vector<std::size_t> piv;
};

Space rref(const ModPrime& f, std::vector<std::vector<std::uint64_t>> a) {
  Space s;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    std::uint64_t inv = f.inv(a[r][c]);
    for (auto& x : a[r]) x = f.mul(x, inv);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      std::uint64_t m = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] = f.sub(a[i][j], f.mul(m, a[r][j]));
    }
    s.piv.push_back(c);
    ++r;
  }
  a.resize(r);
  s.rows = std::move(a);
  return s;
}

std::string table_id(const FiniteGroup& g) {
  std::uint64_t h = 1469598103934665603ULL;
  for (const auto& gen : g.group().generators()) h = (h ^ hash_perm(gen.images())) * 1099511628211ULL;
  std::ostringstream os;
  os << (g.name().empty() ? "group" : g.name()) << ':' << g.order() << ':' << std::hex << (h & 0xffffffffULL);
  return os.str();
}

}  // namespace

CharTable dixon_schneider(const FiniteGroup& g) {
  const std::size_t r = g.num_classes();
  const std::uint64_t n = g.order(), e = g.exponent();
  const ElementTable& t = g.elements();
  std::vector<std::uint32_t> rep(r);
  for (std::size_t c = 0; c < r; ++c) rep[c] = t.index_of(g.cls(static_cast<int>(c)).rep.images());
  // a[(j*r + k)*r + l] = #{x in C_j : x^-1 g_l in C_k}
  std::vector<std::uint32_t> a(r * r * r, 0);
  for (std::uint32_t x = 0; x < t.size(); ++x) {
    std::size_t j = g.class_of_index(x);
    std::uint32_t xi = t.inverse(x);
    for (std::size_t l = 0; l < r; ++l) {
      std::size_t k = g.class_of_index(t.multiply(xi, rep[l]));
      ++a[(j * r + k) * r + l];
    }
  }
  const ModPrime f{prime_one_mod(e, std::max<std::uint64_t>(n, 1ULL << 30))};
  std::mt19937_64 rng(0x5eed5eedULL);

  std::vector<Space> spaces;
  {
    std::vector<std::vector<std::uint64_t>> id(r, std::vector<std::uint64_t>(r, 0));
    for (std::size_t i = 0; i < r; ++i) id[i][i] = 1;
    spaces.push_back(rref(f, id));
  }
  for (std::size_t j = 1; j < r; ++j) {
    bool all_one = true;
    for (const auto& s : spaces) all_one = all_one && s.rows.size() == 1;
    if (all_one) break;
    std::vector<Space> next;
    for (auto& s : spaces) {
      const std::size_t d = s.rows.size();
      if (d == 1) {
        next.push_back(std::move(s));
        continue;
      }
      ModMatrix X(d, std::vector<std::uint64_t>(d, 0));
      for (std::size_t i = 0; i < d; ++i) {
        const auto& b = s.rows[i];
        for (std::size_t kk = 0; kk < d; ++kk) {
          std::size_t k = s.piv[kk];
          std::uint64_t v = 0;
          const std::uint32_t* row = &a[(j * r + k) * r];
          for (std::size_t l = 0; l < r; ++l)
            if (row[l] && b[l]) v = f.add(v, f.mul(row[l], b[l]));
          X[kk][i] = v;
        }
      }
      auto roots = poly_roots(f, char_poly(f, X), rng);
      if (roots.size() <= 1) {
        next.push_back(std::move(s));
        continue;
      }
      std::size_t total = 0;
      for (auto lam : roots) {
        ModMatrix Y = X;
        for (std::size_t i = 0; i < d; ++i) Y[i][i] = f.sub(Y[i][i], lam);
        auto ns = null_space(f, Y);
        std::vector<std::vector<std::uint64_t>> vecs;
        for (const auto& y : ns) {
          std::vector<std::uint64_t> v(r, 0);
          for (std::size_t i = 0; i < d; ++i)
            if (y[i])
              for (std::size_t l = 0; l < r; ++l) v[l] = f.add(v[l], f.mul(y[i], s.rows[i][l]));
          vecs.push_back(std::move(v));
        }
        total += vecs.size();
        next.push_back(rref(f, std::move(vecs)));
      }
      INDRES_ASSERT(total == d, "class matrix is not diagonalizable on eigenspace");
    }
    spaces = std::move(next);
  }
  INDRES_ASSERT(spaces.size() == r, "eigenspace splitting did not separate all characters");

  std::vector<std::uint64_t> inv_size(r);
  for (std::size_t c = 0; c < r; ++c) inv_size[c] = f.inv(g.cls(static_cast<int>(c)).size % f.q);
  const std::uint64_t wroot = root_of_unity(f.q, e);

  std::vector<std::vector<Cyclotomic>> irr;
  for (const auto& s : spaces) {
    std::vector<std::uint64_t> w = s.rows[0];
    if (w[0] == 0) throw InternalError("central character vanishes on the identity");
    std::uint64_t inv0 = f.inv(w[0]);
    for (auto& x : w) x = f.mul(x, inv0);
    std::uint64_t sum = 0;
    for (std::size_t l = 0; l < r; ++l)
      sum = f.add(sum, f.mul(f.mul(w[l], w[g.inverse_class(static_cast<int>(l))]), inv_size[l]));
    std::uint64_t d2 = f.mul(n % f.q, f.inv(sum));
    std::uint64_t d = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(d2)));
    while (d * d > d2) --d;
    while ((d + 1) * (d + 1) <= d2) ++d;
    if (d == 0 || d * d != d2 || n % d) throw InternalError("could not recover a character degree");
    std::vector<std::uint64_t> val(r);
    for (std::size_t l = 0; l < r; ++l) val[l] = f.mul(f.mul(w[l], d % f.q), inv_size[l]);
    std::vector<Cyclotomic> row(r);
    for (std::size_t l = 0; l < r; ++l) {
      const std::uint64_t o = g.cls(static_cast<int>(l)).rep_order;
      const std::uint64_t z = f.pow(wroot, e / o), zinv = f.inv(z), oinv = f.inv(o % f.q);
      std::vector<std::pair<long long, BigInt>> terms;
      std::uint64_t msum = 0;
      for (std::uint64_t tt = 0; tt < o; ++tt) {
        std::uint64_t acc = 0, step = f.pow(zinv, tt), zk = 1;
        for (std::uint64_t k = 0; k < o; ++k) {
          acc = f.add(acc, f.mul(val[g.power_class(static_cast<int>(l), static_cast<long long>(k))], zk));
          zk = f.mul(zk, step);
        }
        std::uint64_t m = f.mul(acc, oinv);
        if (m > d) throw InternalError("eigenvalue multiplicity out of range");
        msum += m;
        if (m) terms.emplace_back(static_cast<long long>(tt), BigInt(static_cast<unsigned long>(m)));
      }
      if (msum != d) throw InternalError("eigenvalue multiplicities do not sum to the degree");
      row[l] = Cyclotomic::from_terms(o, terms);
    }
    irr.push_back(std::move(row));
  }
  std::sort(irr.begin(), irr.end(), [&](const auto& x, const auto& y) {
    if (x[0].rational_part() != y[0].rational_part()) return x[0].rational_part() < y[0].rational_part();
    auto trivial = [](const auto& row) {
      for (const auto& v : row)
        if (!v.is_rational() || v.rational_part() != 1) return false;
      return true;
    };
    bool tx = trivial(x), ty = trivial(y);
    if (tx != ty) return tx;
    for (std::size_t c = 0; c < x.size(); ++c) {
      if (x[c].less(y[c])) return true;
      if (y[c].less(x[c])) return false;
    }
    return false;
  });
  std::vector<ClassInfo> info(r);
  for (std::size_t c = 0; c < r; ++c) {
    const auto& cc = g.cls(static_cast<int>(c));
    info[c] = {cc.size, cc.rep_order, cc.power_map};
  }
  return CharTable(table_id(g), n, std::move(info), std::move(irr));
}

CharTable product_table(const FiniteGroup& prod) {
  const CharTable &A = prod.factor_a()->table(), &B = prod.factor_b()->table();
  const std::size_t ra = A.num_classes(), rb = B.num_classes();
  std::vector<ClassInfo> info(ra * rb);
  for (std::size_t c = 0; c < ra * rb; ++c) {
    const auto& cc = prod.cls(static_cast<int>(c));
    info[c] = {cc.size, cc.rep_order, cc.power_map};
  }
  std::vector<std::vector<Cyclotomic>> irr(ra * rb, std::vector<Cyclotomic>(ra * rb));
  for (std::size_t i = 0; i < ra; ++i)
    for (std::size_t j = 0; j < rb; ++j)
      for (std::size_t x = 0; x < ra; ++x)
        for (std::size_t y = 0; y < rb; ++y) {
          Cyclotomic v = A.value(i, x) * B.value(j, y);
          std::uint64_t o = info[x * rb + y].rep_order;
          if (o % v.modulus() == 0) v = v.lift(o);
          irr[i * rb + j][x * rb + y] = std::move(v);
        }
  return CharTable(A.id() + "x" + B.id(), prod.order(), std::move(info), std::move(irr));
}

}  // namespace indres
