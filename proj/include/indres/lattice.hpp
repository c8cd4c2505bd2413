#pragma once

#include <string>
#include <vector>

#include "indres/bigint.hpp"

namespace indres {

using IntVec = std::vector<BigInt>;

// Sublattice of Z^n stored as its row Hermite normal form: rows in echelon
// form, positive pivots, entries above each pivot reduced into [0, pivot).
class IntLattice {
 public:
  explicit IntLattice(std::size_t dim = 0) : dim_(dim) {}
  static IntLattice from_generators(std::size_t dim, const std::vector<IntVec>& gens);
  static IntLattice coordinate(std::size_t dim, const std::vector<std::size_t>& coords);
  static IntLattice full(std::size_t dim);

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<IntVec>& basis() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return piv_; }

  bool contains(const IntVec& v) const;
  bool contains(const IntLattice& other) const;
  IntLattice sum(const IntLattice& other) const;
  // L intersected with the coordinate sublattice spanned by e_i, i in coords.
  IntLattice restrict_to(const std::vector<std::size_t>& coords) const;
  // Image of L under the projection that zeroes all coordinates not in coords.
  IntLattice project(const std::vector<std::size_t>& coords) const;
  IntLattice scaled(const BigInt& k) const;

  bool operator==(const IntLattice& o) const { return dim_ == o.dim_ && rows_ == o.rows_; }

 private:
  bool insert(IntVec v);
  void reduce();

  std::size_t dim_ = 0;
  std::vector<IntVec> rows_;
  std::vector<std::size_t> piv_;
};

struct QuotientInvariants {
  std::size_t free_rank = 0;
  std::vector<BigInt> torsion;  // invariant factors > 1, each dividing the next
  std::string to_string() const;  // e.g. "Z^2 + Z/2", "0"
  bool operator==(const QuotientInvariants& o) const {
    return free_rank == o.free_rank && torsion == o.torsion;
  }
};

// Invariants of ambient / sub; sub must be contained in ambient.
QuotientInvariants quotient_invariants(const IntLattice& ambient, const IntLattice& sub);
// Nonzero invariant factors of an integer matrix, ascending.
std::vector<BigInt> smith_invariants(std::vector<IntVec> m);

}  // namespace indres
