#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "indres/char_table.hpp"
#include "indres/finite_group.hpp"
#include "indres/modarith.hpp"
#include "indres/subgroups.hpp"

namespace indres {

// F_p[x]/(f) with f monic irreducible of degree d. Elements are coefficient
// vectors of length d, lowest degree first.
class ResidueField {
 public:
  using Elem = std::vector<std::uint32_t>;
  ResidueField() = default;
  ResidueField(std::uint64_t p, ModPoly f);
  // f is the index-th monic irreducible of degree d in the order of
  // encode(f - x^d) (index 0 = least).
  static ResidueField make(std::uint64_t p, int d, int index = 0);

  std::uint64_t p() const { return p_; }
  int degree() const { return d_; }
  const ModPoly& modulus() const { return f_; }
  Elem zero() const { return Elem(d_, 0); }
  Elem one() const;
  Elem add(const Elem& a, const Elem& b) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem pow(Elem a, std::uint64_t e) const;
  Elem scalar(std::uint64_t c) const;
  bool is_zero(const Elem& a) const;
  std::uint64_t encode(const Elem& a) const;  // base-p digits, constant term lowest
  Elem decode(std::uint64_t v) const;

 private:
  std::uint64_t p_ = 2;
  int d_ = 1;
  ModPoly f_;
};

bool is_irreducible(const ModPrime& f, const ModPoly& poly);

// Ring homomorphism Z[zeta_m] -> F_{p^d}: zeta_m^j -> beta^(j t mod m'), where
// m = p^a m', t = (p^a)^-1 mod m' and beta has multiplicative order m'.
class ModularReduction {
 public:
  // variant 0 is the default ideal. Variant k > 0 uses the (k mod 2)-th
  // irreducible polynomial and raises beta to the k-th unit mod m' above 1.
  static ModularReduction make(std::uint64_t p, std::uint64_t exponent, int variant = 0);

  std::uint64_t p() const { return field_.p(); }
  std::uint64_t exponent() const { return m_; }
  const ResidueField& field() const { return field_; }
  ResidueField::Elem reduce(const Cyclotomic& v) const;
  std::uint64_t root_image_code() const { return field_.encode(beta_pow_.size() > 1 ? beta_pow_[1] : field_.one()); }

 private:
  ResidueField field_;
  std::uint64_t m_ = 1, mprime_ = 1, t_ = 0;
  std::vector<ResidueField::Elem> beta_pow_;
};

struct Block {
  std::vector<std::size_t> chars;  // ascending
  int defect = 0;
  std::vector<ResidueField::Elem> lambda;  // central character per class
  int defect_class = -1;
  IndexSet defect_group;  // element indices in the group's element table
};

// Blocks ordered by least character index. Defect groups are filled in.
std::vector<Block> compute_blocks(const FiniteGroup& g, std::uint64_t p, const ModularReduction& red);
std::vector<Block> compute_blocks(const FiniteGroup& g, std::uint64_t p);

// Index of the block of G whose central character equals the induced one, or
// nullopt if none or more than one match.
std::optional<std::size_t> brauer_correspondent(const FiniteGroup& h, const Block& e,
                                                const FiniteGroup& g, const std::vector<Block>& g_blocks,
                                                const ModularReduction& red);

// Degree valuations and height data.
int height(const CharTable& t, std::size_t chi, std::uint64_t p, const Block& b);

struct CharSubsets {
  std::vector<std::size_t> all;   // Irr(X, P)
  std::vector<std::size_t> zero;  // Irr_0(X, P)
  std::vector<std::size_t> high;  // Irr^p(X, P)
  std::vector<std::size_t> blocks;  // blocks with a defect group conjugate into P
};
// P is given by element indices in g's element table.
CharSubsets char_subsets(const FiniteGroup& g, std::uint64_t p, const IndexSet& P,
                         const std::vector<Block>& blocks);

// True if some X-conjugate of a lies inside b (orbit of a scanned with early exit).
bool conjugate_into_subgroup(const FiniteGroup& x, const IndexSet& a, const IndexSet& b);

}  // namespace indres
