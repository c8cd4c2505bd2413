#pragma once

#include <cstdint>
#include <vector>

#include "indres/cyclotomic.hpp"
#include "indres/element_table.hpp"

namespace indres {

// Independent reference computations for small groups. They share only the
// element table and cyclotomic arithmetic with the main pipeline.

struct BruteClass {
  std::uint32_t rep;  // least element index in the class
  std::uint64_t size;
  std::uint64_t rep_order;
};

// Conjugacy classes as orbits under conjugation by every element, ordered by
// least member. Throws ResourceError above `budget` group order.
std::vector<BruteClass> brute_classes(const ElementTable& t, std::uint64_t budget = 5000);

struct BruteTable {
  std::vector<BruteClass> classes;
  std::uint64_t exponent = 1;
  // Rows in order of discovery; values are in Q(zeta_exponent).
  std::vector<std::vector<Cyclotomic>> irr;
};

// Irreducible characters by the lattice method: the characters induced from
// faithful linear characters of cyclic sections E/K span Z Irr(G); an LLL
// reduced Gram matrix of that span and a Fincke-Pohst search give the vectors
// of norm 1. Accepted only if the degrees reassemble the regular character.
// Rows are sorted by degree, then values. Throws ResourceError above `budget`
// group order.
BruteTable brute_table(const ElementTable& t, std::uint64_t budget = 500);

}  // namespace indres
