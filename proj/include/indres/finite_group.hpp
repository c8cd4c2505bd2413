#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "indres/element_table.hpp"
#include "indres/perm_group.hpp"

namespace indres {

class CharTable;

constexpr std::size_t kDefaultClassBudget = 400;

struct ConjClass {
  Permutation rep;  // lexicographically least element of the class
  std::uint64_t size = 0;
  std::uint64_t rep_order = 0;
  std::uint64_t centralizer_order = 0;
  std::map<std::uint64_t, int> power_map;  // prime -> class of rep^prime
};

// A permutation group together with its element list, conjugacy classes and
// (on demand) character table. Classes are sorted by representative order,
// then size, then representative.
class FiniteGroup {
 public:
  using Ptr = std::shared_ptr<const FiniteGroup>;

  // Throws ResourceError if the order exceeds `budget`; table() throws it if
  // the class count exceeds `class_budget`.
  static Ptr make(PermGroup g, std::string name = "",
                  std::uint64_t budget = kDefaultOrderBudget, std::size_t class_budget = kDefaultClassBudget);
  static Ptr make(std::size_t degree, std::vector<Permutation> gens, std::string name = "",
                  std::uint64_t budget = kDefaultOrderBudget, std::size_t class_budget = kDefaultClassBudget);
  // Direct product acting on the disjoint union of the two point sets.
  // Classes and character table come from the factors: class (i, j) has index
  // i * r_b + j, and likewise for irreducible characters.
  static Ptr direct_product(Ptr a, Ptr b, std::string name = "");

  const std::string& name() const { return name_; }
  const PermGroup& group() const { return group_; }
  std::uint64_t order() const { return order_; }
  std::size_t degree() const { return group_.degree(); }
  const ElementTable& elements() const;

  std::size_t num_classes() const { return classes_.size(); }
  const std::vector<ConjClass>& classes() const { return classes_; }
  const ConjClass& cls(int c) const { return classes_[c]; }
  int class_of(PermView g) const;  // -1 if g is not in the group
  int class_of(const Permutation& g) const { return class_of(g.images()); }
  int class_of_index(std::uint32_t i) const;
  int inverse_class(int c) const { return inverse_[c]; }
  int power_class(int c, long long k) const;
  std::uint64_t exponent() const { return exponent_; }
  const std::vector<std::uint64_t>& primes() const { return primes_; }

  const CharTable& table() const;
  // Uses an externally supplied table instead of computing one. Its class
  // list must match this group's (same order, sizes, element orders and power
  // maps); throws ConsistencyError otherwise, or if a table already exists.
  void install_table(CharTable t) const;

  bool is_product() const { return static_cast<bool>(factor_a_); }
  const Ptr& factor_a() const { return factor_a_; }
  const Ptr& factor_b() const { return factor_b_; }

  FiniteGroup(const FiniteGroup&) = delete;
  FiniteGroup& operator=(const FiniteGroup&) = delete;
  ~FiniteGroup();
  FiniteGroup() = default;

 private:
  void compute_classes();
  void finish_class_data();

  std::string name_;
  PermGroup group_;
  std::uint64_t order_ = 0;
  std::uint64_t budget_ = kDefaultOrderBudget;
  std::size_t class_budget_ = kDefaultClassBudget;
  std::vector<ConjClass> classes_;
  std::vector<int> inverse_;
  std::vector<std::vector<int>> full_power_;  // full_power_[c][k] = class of rep^k
  std::uint64_t exponent_ = 1;
  std::vector<std::uint64_t> primes_;

  mutable std::once_flag elements_once_;
  mutable std::unique_ptr<ElementTable> elements_;
  mutable std::vector<int> class_index_;  // element index -> class
  mutable std::once_flag table_once_;
  mutable std::unique_ptr<CharTable> table_;

  Ptr factor_a_, factor_b_;
};

std::vector<std::uint64_t> prime_factors(std::uint64_t n);

}  // namespace indres
