#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "indres/cyclotomic.hpp"
#include "indres/modarith.hpp"

namespace indres {

class FiniteGroup;

struct ClassInfo {
  std::uint64_t size = 0;
  std::uint64_t rep_order = 0;
  std::map<std::uint64_t, int> power_map;
};

// Ordinary character table. irr[i][c] is the value of the i-th irreducible
// character on class c, an element of Q(zeta_o) with o the order of the class
// representative. Row 0 is the trivial character; rows are sorted by degree.
class CharTable {
 public:
  CharTable() = default;
  CharTable(std::string id, std::uint64_t order, std::vector<ClassInfo> classes,
            std::vector<std::vector<Cyclotomic>> irr);

  const std::string& id() const { return id_; }
  std::uint64_t order() const { return order_; }
  std::uint64_t exponent() const { return exponent_; }
  std::size_t num_classes() const { return classes_.size(); }
  std::size_t num_irr() const { return irr_.size(); }
  const std::vector<ClassInfo>& classes() const { return classes_; }
  const std::vector<std::vector<Cyclotomic>>& irr() const { return irr_; }
  const Cyclotomic& value(std::size_t i, std::size_t c) const { return irr_[i][c]; }
  BigInt degree(std::size_t i) const { return irr_[i][0].rational_part(); }
  std::uint64_t centralizer_order(std::size_t c) const { return order_ / classes_[c].size; }
  int inverse_class(std::size_t c) const { return inverse_[c]; }
  int dual(std::size_t i) const { return dual_[i]; }

  // Exact checks of both orthogonality relations and sum of squared degrees;
  // throws IntegrityError on failure.
  void verify() const;
  // Images of all values under Z[zeta_e] -> F_q, zeta_e -> w. Requires every
  // class order to divide e.
  std::vector<std::vector<std::uint64_t>> image(const ModPrime& f, std::uint64_t w,
                                                std::uint64_t e) const;

 private:
  void derive();

  std::string id_;
  std::uint64_t order_ = 0;
  std::uint64_t exponent_ = 1;
  std::vector<ClassInfo> classes_;
  std::vector<std::vector<Cyclotomic>> irr_;
  std::vector<int> inverse_;
  std::vector<int> dual_;
};

// Fixed embedding Z[zeta_e] -> F_q used for exact integer-valued products.
struct Embedding {
  ModPrime f;
  std::uint64_t e;
  std::uint64_t w;
  static Embedding for_exponent(std::uint64_t e);
  std::uint64_t map(const Cyclotomic& v) const;
};

CharTable dixon_schneider(const FiniteGroup& g);
CharTable product_table(const FiniteGroup& product);

}  // namespace indres
