#pragma once

#include <functional>
#include <vector>

#include "indres/bigint.hpp"
#include "indres/permutation.hpp"

namespace indres {

// Permutation group given by generators, with a stabilizer chain built by
// the deterministic Schreier-Sims algorithm.
class PermGroup {
 public:
  PermGroup() = default;
  PermGroup(std::size_t degree, std::vector<Permutation> generators);

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return gens_; }
  const BigInt& order() const { return order_; }
  std::vector<int> base() const;
  std::vector<std::size_t> orbit_lengths() const;

  bool contains(PermView g) const;
  bool contains(const Permutation& g) const { return contains(g.images()); }
  bool is_subgroup_of(const PermGroup& other) const;

  // Visits every element exactly once, in a fixed order that depends only on
  // the generator list. The identity comes first.
  void for_each_element(const std::function<void(PermView)>& fn) const;

 private:
  struct Level {
    int point = 0;
    std::vector<int> gens;                // indices into strong_
    std::vector<int> orbit;               // orbit[0] == point
    std::vector<int> slot;                // point -> position in orbit, or -1
    std::vector<Permutation> transversal; // transversal[k] maps point to orbit[k]
  };

  void schreier_sims();
  void rebuild_level(std::size_t i);
  // Sifts g through levels from `start`; returns the residue and the level
  // at which sifting stopped (levels_.size() if it went through).
  std::pair<Permutation, std::size_t> strip(Permutation g, std::size_t start) const;

  std::size_t degree_ = 0;
  std::vector<Permutation> gens_;
  std::vector<Permutation> strong_;
  std::vector<Level> levels_;
  BigInt order_ = 1;
};

}  // namespace indres
