#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "indres/char_table.hpp"
#include "indres/finite_group.hpp"
#include "indres/lattice.hpp"

namespace indres {

// Element of Z Irr(G): integer coefficients over the rows of one table.
class VirtualCharacter {
 public:
  VirtualCharacter() = default;
  VirtualCharacter(std::string table, IntVec coeffs) : table_(std::move(table)), c_(std::move(coeffs)) {}
  static VirtualCharacter zero(const CharTable& t);
  static VirtualCharacter irreducible(const CharTable& t, std::size_t i, long sign = 1);

  const std::string& table() const { return table_; }
  const IntVec& coeffs() const { return c_; }
  const BigInt& operator[](std::size_t i) const { return c_[i]; }
  std::size_t size() const { return c_.size(); }

  VirtualCharacter operator+(const VirtualCharacter& o) const;
  VirtualCharacter operator-(const VirtualCharacter& o) const;
  VirtualCharacter operator-() const;
  VirtualCharacter operator*(const BigInt& k) const;
  bool operator==(const VirtualCharacter& o) const { return table_ == o.table_ && c_ == o.c_; }
  bool is_zero() const;

  BigInt degree(const CharTable& t) const;
  std::vector<Cyclotomic> values(const CharTable& t) const;

 private:
  void check_same(const VirtualCharacter& o) const;
  std::string table_;
  IntVec c_;
};

// (1/|G|) sum_C |C| a(C) conj(b(C)), exact. Throws DomainError if the
// result is not an algebraic integer combination (i.e. not divisible).
Cyclotomic inner_product(const std::vector<Cyclotomic>& a, const std::vector<Cyclotomic>& b,
                         const CharTable& t);
// Exact decomposition of a class function into irreducibles.
VirtualCharacter decompose(const std::vector<Cyclotomic>& values, const CharTable& t);
VirtualCharacter dual_character(const VirtualCharacter& chi, const CharTable& t);

// Class fusion of sub into ambient: fusion[c] = ambient class of the
// representative of class c of sub.
std::vector<int> class_fusion(const FiniteGroup& sub, const FiniteGroup& ambient);

// Induction/restriction between a subgroup and its ambient group.
// m[i][j] = <Res chi_j, psi_i>, psi_i in Irr(sub), chi_j in Irr(ambient).
class Restriction {
 public:
  Restriction(FiniteGroup::Ptr sub, FiniteGroup::Ptr ambient);
  const std::vector<int>& fusion() const { return fusion_; }
  const std::vector<std::vector<long long>>& matrix() const { return m_; }
  VirtualCharacter induce(const VirtualCharacter& psi) const;
  VirtualCharacter restrict(const VirtualCharacter& chi) const;
  const FiniteGroup& sub() const { return *sub_; }
  const FiniteGroup& ambient() const { return *amb_; }

 private:
  FiniteGroup::Ptr sub_, amb_;
  std::vector<int> fusion_;
  std::vector<std::vector<long long>> m_;
};

// m[i][j] = <Ind psi_i, chi_j> computed through a fixed embedding into F_q.
std::vector<std::vector<long long>> induction_coefficients(const CharTable& sub, const CharTable& amb,
                                                           const std::vector<int>& fusion);
// Exact route used as an independent check: values of Ind psi by the
// class-sum formula, then exact decomposition.
VirtualCharacter induce_exact(const VirtualCharacter& psi, const FiniteGroup& sub,
                              const FiniteGroup& amb);

// Irr(G x H) = Irr(G) x Irr(H) with index i * |Irr(H)| + j.
VirtualCharacter outer_product(const VirtualCharacter& chi, const CharTable& tg,
                               const VirtualCharacter& theta, const CharTable& th,
                               const CharTable& product);

// Sum over xi in Irr(G | phi) of <chi, xi> xi, for L normal in G.
VirtualCharacter pi_phi(const VirtualCharacter& chi, const Restriction& g_over_l, std::size_t phi);

// M_l counts: for each l in 1..(p-1)/2 (l = 1 for p = 2) the number of
// characters in `subset` whose degree (or p'-part of the degree when
// p_prime_part is set) is congruent to +l or -l mod p.
std::map<int, int> ml_counts(const CharTable& t, std::uint64_t p, bool p_prime_part,
                             const std::vector<std::size_t>* subset = nullptr,
                             std::uint64_t multiplier = 1);

}  // namespace indres
