#pragma once

#include <cstdint>
#include <vector>

#include "indres/element_table.hpp"

namespace indres {

// Subgroup of an enumerated group, as a sorted list of element indices.
using IndexSet = std::vector<std::uint32_t>;

IndexSet closure(const ElementTable& t, const std::vector<std::uint32_t>& gens);
IndexSet join(const ElementTable& t, const IndexSet& a, const std::vector<std::uint32_t>& extra);
bool contains(const IndexSet& s, std::uint32_t x);
bool is_subset(const IndexSet& small, const IndexSet& big);
IndexSet intersect(const IndexSet& a, const IndexSet& b);
std::vector<std::uint32_t> generating_set(const ElementTable& t, const IndexSet& s);

IndexSet centralizer(const ElementTable& t, std::uint32_t x, const IndexSet* within = nullptr);
IndexSet normalizer(const ElementTable& t, const IndexSet& k, const IndexSet* within = nullptr);
IndexSet conjugate(const ElementTable& t, const IndexSet& k, std::uint32_t g);
IndexSet whole_group(const ElementTable& t);

// Sylow p-subgroup of the subgroup y: start from 1 and repeatedly adjoin the
// first element of N_y(S) \ S whose p-th power lies in S.
IndexSet sylow(const ElementTable& t, const IndexSet& y, std::uint64_t p);

// Orbit of k under conjugation by the given elements. witnesses[i] conjugates
// k onto orbit[i] (orbit[i] = witnesses[i]^-1 k witnesses[i]).
struct ConjugateOrbit {
  std::vector<IndexSet> members;
  std::vector<std::uint32_t> witnesses;
};
ConjugateOrbit conjugate_orbit(const ElementTable& t, const IndexSet& k,
                               const std::vector<std::uint32_t>& acting);

// First element of `acting`'s group conjugating a into a subgroup of b, or -1.
std::int64_t conjugate_into(const ElementTable& t, const IndexSet& a, const IndexSet& b,
                            const std::vector<std::uint32_t>& acting);

}  // namespace indres
