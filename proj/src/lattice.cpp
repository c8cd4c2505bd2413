#include "indres/lattice.hpp"

#include <algorithm>
#include <sstream>

#include "indres/errors.hpp"

namespace indres {

namespace {

std::size_t leading(const IntVec& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) return i;
  return v.size();
}

void axpy(IntVec& y, const BigInt& a, const IntVec& x) {
  for (std::size_t i = 0; i < y.size(); ++i)
    if (x[i] != 0) y[i] += a * x[i];
}

}  // namespace

IntLattice IntLattice::from_generators(std::size_t dim, const std::vector<IntVec>& gens) {
  IntLattice L(dim);
  for (const auto& g : gens) {
    if (g.size() != dim) throw DomainError("generator has wrong dimension");
    if (!L.contains(g)) {
      L.insert(g);
      L.reduce();
    }
  }
  return L;
}

IntLattice IntLattice::coordinate(std::size_t dim, const std::vector<std::size_t>& coords) {
  std::vector<IntVec> g;
  for (auto c : coords) {
    IntVec v(dim, 0);
    v.at(c) = 1;
    g.push_back(std::move(v));
  }
  return from_generators(dim, g);
}

IntLattice IntLattice::full(std::size_t dim) {
  std::vector<std::size_t> all(dim);
  for (std::size_t i = 0; i < dim; ++i) all[i] = i;
  return coordinate(dim, all);
}

bool IntLattice::insert(IntVec v) {
  bool changed = false;
  std::size_t i = 0;
  while (true) {
    std::size_t lead = leading(v);
    if (lead == dim_) return changed;
    while (i < rows_.size() && piv_[i] < lead) ++i;
    if (i == rows_.size() || piv_[i] > lead) {
      rows_.insert(rows_.begin() + static_cast<long>(i), std::move(v));
      piv_.insert(piv_.begin() + static_cast<long>(i), lead);
      return true;
    }
    IntVec& row = rows_[i];
    const BigInt a = row[lead], b = v[lead];
    if (mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t())) {
      axpy(v, -(b / a), row);
      continue;
    }
    BigInt g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    IntVec nr(dim_), nv(dim_);
    const BigInt ag = a / g, bg = b / g;
    for (std::size_t k = 0; k < dim_; ++k) {
      nr[k] = s * row[k] + t * v[k];
      nv[k] = ag * v[k] - bg * row[k];
    }
    row = std::move(nr);
    v = std::move(nv);
    changed = true;
  }
}

void IntLattice::reduce() {
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (rows_[i][piv_[i]] < 0)
      for (auto& x : rows_[i]) x = -x;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const BigInt& p = rows_[i][piv_[i]];
    for (std::size_t j = 0; j < i; ++j) {
      BigInt q;
      mpz_fdiv_q(q.get_mpz_t(), rows_[j][piv_[i]].get_mpz_t(), p.get_mpz_t());
      if (q != 0) axpy(rows_[j], -q, rows_[i]);
    }
  }
}

bool IntLattice::contains(const IntVec& v0) const {
  if (v0.size() != dim_) throw DomainError("vector has wrong dimension");
  IntVec v = v0;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    std::size_t lead = leading(v);
    if (lead == dim_) return true;
    if (lead < piv_[i]) return false;
    if (lead > piv_[i]) continue;
    const BigInt& a = rows_[i][lead];
    if (!mpz_divisible_p(v[lead].get_mpz_t(), a.get_mpz_t())) return false;
    axpy(v, -(v[lead] / a), rows_[i]);
  }
  return leading(v) == dim_;
}

bool IntLattice::contains(const IntLattice& o) const {
  for (const auto& r : o.rows_)
    if (!contains(r)) return false;
  return true;
}

IntLattice IntLattice::sum(const IntLattice& o) const {
  if (o.dim_ != dim_) throw DomainError("lattice dimension mismatch");
  IntLattice r = *this;
  for (const auto& v : o.rows_)
    if (!r.contains(v)) {
      r.insert(v);
      r.reduce();
    }
  return r;
}

IntLattice IntLattice::restrict_to(const std::vector<std::size_t>& coords) const {
  std::vector<char> keep(dim_, 0);
  for (auto c : coords) keep.at(c) = 1;
  // Column order: dropped coordinates first, then kept ones. Rows of the HNF
  // whose pivot lies among the kept columns span the intersection.
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < dim_; ++i)
    if (!keep[i]) order.push_back(i);
  const std::size_t ndrop = order.size();
  for (std::size_t i = 0; i < dim_; ++i)
    if (keep[i]) order.push_back(i);
  std::vector<IntVec> perm;
  for (const auto& r : rows_) {
    IntVec v(dim_);
    for (std::size_t k = 0; k < dim_; ++k) v[k] = r[order[k]];
    perm.push_back(std::move(v));
  }
  IntLattice P = from_generators(dim_, perm);
  std::vector<IntVec> out;
  for (std::size_t i = 0; i < P.rows_.size(); ++i) {
    if (P.piv_[i] < ndrop) continue;
    IntVec v(dim_, 0);
    for (std::size_t k = 0; k < dim_; ++k) v[order[k]] = P.rows_[i][k];
    out.push_back(std::move(v));
  }
  return from_generators(dim_, out);
}

IntLattice IntLattice::project(const std::vector<std::size_t>& coords) const {
  std::vector<char> keep(dim_, 0);
  for (auto c : coords) keep.at(c) = 1;
  std::vector<IntVec> out;
  for (const auto& r : rows_) {
    IntVec v(dim_, 0);
    for (std::size_t k = 0; k < dim_; ++k)
      if (keep[k]) v[k] = r[k];
    out.push_back(std::move(v));
  }
  return from_generators(dim_, out);
}

IntLattice IntLattice::scaled(const BigInt& k) const {
  std::vector<IntVec> out = rows_;
  for (auto& r : out)
    for (auto& x : r) x *= k;
  return from_generators(dim_, out);
}

std::vector<BigInt> smith_invariants(std::vector<IntVec> m) {
  std::vector<BigInt> inv;
  std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // smallest nonzero entry in the remaining block
    std::size_t pr = rows, pc = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (m[i][j] != 0 && (pr == rows || abs(m[i][j]) < abs(m[pr][pc]))) pr = i, pc = j;
    if (pr == rows) break;
    std::swap(m[t], m[pr]);
    for (auto& row : m) std::swap(row[t], row[pc]);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m[i][t] == 0) continue;
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), m[i][t].get_mpz_t(), m[t][t].get_mpz_t());
        axpy(m[i], -q, m[t]);
        if (m[i][t] != 0) {
          std::swap(m[i], m[t]);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m[t][j] == 0) continue;
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), m[t][j].get_mpz_t(), m[t][t].get_mpz_t());
        for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        if (m[t][j] != 0) {
          for (auto& row : m) std::swap(row[t], row[j]);
          clean = false;
        }
      }
      if (clean) {
        // pivot must divide the rest of the block
        for (std::size_t i = t + 1; i < rows && clean; ++i)
          for (std::size_t j = t + 1; j < cols && clean; ++j)
            if (!mpz_divisible_p(m[i][j].get_mpz_t(), m[t][t].get_mpz_t())) {
              axpy(m[t], BigInt(1), m[i]);
              clean = false;
            }
      }
    }
    inv.push_back(abs(m[t][t]));
    ++t;
  }
  std::sort(inv.begin(), inv.end());
  return inv;
}

QuotientInvariants quotient_invariants(const IntLattice& ambient, const IntLattice& sub) {
  if (ambient.dim() != sub.dim()) throw DomainError("lattice dimension mismatch");
  const auto& B = ambient.basis();
  const auto& piv = ambient.pivots();
  const std::size_t k = B.size();
  std::vector<IntVec> coords;
  for (const auto& s : sub.basis()) {
    IntVec c(k, 0), rest = s;
    for (std::size_t i = 0; i < k; ++i) {
      const BigInt& a = B[i][piv[i]];
      if (!mpz_divisible_p(rest[piv[i]].get_mpz_t(), a.get_mpz_t()))
        throw PreconditionError("sublattice is not contained in the ambient lattice");
      c[i] = rest[piv[i]] / a;
      axpy(rest, -c[i], B[i]);
    }
    for (const auto& x : rest)
      if (x != 0) throw PreconditionError("sublattice is not contained in the ambient lattice");
    coords.push_back(std::move(c));
  }
  QuotientInvariants q;
  auto inv = coords.empty() ? std::vector<BigInt>{} : smith_invariants(coords);
  q.free_rank = k - inv.size();
  for (auto& d : inv)
    if (d != 1) q.torsion.push_back(d);
  return q;
}

std::string QuotientInvariants::to_string() const {
  std::ostringstream os;
  bool first = true;
  if (free_rank) {
    os << "Z";
    if (free_rank > 1) os << '^' << free_rank;
    first = false;
  }
  for (const auto& t : torsion) {
    os << (first ? "" : " + ") << "Z/" << t.get_str();
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace indres
