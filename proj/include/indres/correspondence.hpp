#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "indres/blocks.hpp"
#include "indres/classfun.hpp"
#include "indres/finite_group.hpp"
#include "indres/lattice.hpp"
#include "indres/subgroups.hpp"

namespace indres {

// Maximal members of the intersection set, as subgroups of P in the element
// table of G. witnesses[i] is an element t outside H with maxima[i] <= tPt^-1.
struct IntersectionSetMaxima {
  std::vector<IndexSet> maxima;
  std::vector<std::uint32_t> witnesses;
};

// H is given by its element indices in G's table. Throws PreconditionError if
// N_G(P) is not contained in H.
IntersectionSetMaxima intersection_set_maxima(const FiniteGroup& g, const IndexSet& P, const IndexSet& H);

// Element indices of `s` (a subset of from's group) in the table `to`.
IndexSet transfer(const ElementTable& from, const IndexSet& s, const ElementTable& to);

// Subgroups R of X with some X-conjugate of R inside one of `maxima`. With
// all_qualify set every p-subgroup qualifies.
class Qualifier {
 public:
  Qualifier(const FiniteGroup& x, std::vector<IndexSet> maxima, bool all_qualify = false);
  bool all() const { return all_; }
  const std::vector<IndexSet>& maxima() const { return maxima_; }
  bool element_qualifies(std::uint32_t p_element) const;
  bool qualifies(const IndexSet& r) const;
  // Maximal qualifying subgroups of the p-subgroup t.
  std::vector<IndexSet> maximal_inside(const IndexSet& t) const;

 private:
  const FiniteGroup& x_;
  std::vector<IndexSet> maxima_;
  bool all_;
  std::vector<char> class_ok_;
  mutable std::vector<std::vector<IndexSet>> orbits_;
};

// Maximal qualifying elementary subgroups <x> x L up to conjugacy (extra
// conjugates may remain). Subgroups of these add nothing to the induced span.
std::vector<IndexSet> qualifying_elementary_subgroups(const FiniteGroup& x, std::uint64_t p,
                                                      const Qualifier& q);

// Span of Ind_E^X Irr(E) over the given subgroups of X.
IntLattice induced_span(const FiniteGroup::Ptr& x, const std::vector<IndexSet>& subgroups);
IntLattice build_induced_lattice(const FiniteGroup::Ptr& x, std::uint64_t p, const Qualifier& q);

// Span of Ind_E^G Irr(E) over all elementary subgroups equals Z Irr(G).
bool brauer_completeness_check(const FiniteGroup::Ptr& g);

// Every subgroup of X, found by joining cyclic subgroups. Throws
// ResourceError above `budget` group order.
std::vector<IndexSet> all_subgroups(const FiniteGroup& x, std::uint64_t budget = 200);

// The lattice of the definition taken literally: all subgroups L of X whose
// intersection with P is a Sylow p-subgroup of L lying in S. `in_s` decides
// membership of a subgroup of P (indices in X's table).
IntLattice brute_induced_lattice(const FiniteGroup::Ptr& x, std::uint64_t p, const IndexSet& P,
                                 const std::function<bool(const IndexSet&)>& in_s,
                                 std::uint64_t budget = 200);

enum class Property { IRC, WIRC, WIRCstar, pRes, pInd };
const char* property_name(Property p);
std::optional<Property> parse_property(const std::string& s);

struct MatchedPair {
  std::size_t chi;  // index in Irr(G)
  std::size_t phi;  // index in Irr(H)
  int sign;
};

struct Verdict {
  bool holds = false;
  std::vector<MatchedPair> matching;
  std::string certificate;  // empty when holds
};

struct BlockQuotient {
  std::size_t block;  // block of H
  int defect;
  std::vector<std::size_t> chars;
  QuotientInvariants q1, q2;
};

struct QuotientReport {
  QuotientInvariants q1, q2;
  std::vector<BlockQuotient> blocks;  // sorted by (defect desc, least character)
  // bracket components: blocks of H whose defect group has order |P|
  std::vector<QuotientInvariants> bracket_q1() const;
  std::vector<QuotientInvariants> bracket_q2() const;
  std::size_t top_defect = 0;
};

// All data for one (G, p, P, H). Lattices and blocks are computed on
// construction.
class Analysis {
 public:
  // P and H are given by generators acting on G's points. No H means
  // H = N_G(P). h_table replaces the computed table of a proper H; it must
  // follow the class order of the group built from H's generators.
  static std::unique_ptr<Analysis> make(FiniteGroup::Ptr g, std::uint64_t p, const std::vector<Permutation>& p_gens,
                                        std::optional<std::vector<Permutation>> h_gens = std::nullopt,
                                        bool with_lattices = true, std::optional<CharTable> h_table = std::nullopt);
  static std::unique_ptr<Analysis> make(FiniteGroup::Ptr g, std::uint64_t p, const IndexSet& P,
                                        std::optional<IndexSet> H = std::nullopt, bool with_lattices = true,
                                        std::optional<CharTable> h_table = std::nullopt);

  const FiniteGroup& g() const { return *g_; }
  const FiniteGroup& h() const { return *h_; }
  const FiniteGroup::Ptr& g_ptr() const { return g_; }
  const FiniteGroup::Ptr& h_ptr() const { return h_; }
  std::uint64_t p() const { return p_; }
  const IndexSet& P() const { return P_; }        // in G's table
  const IndexSet& P_in_h() const { return P_h_; }  // in H's table
  const IndexSet& H_in_g() const { return H_; }
  bool h_is_g() const { return H_.size() == g_->order(); }
  const IntersectionSetMaxima& s() const { return s_; }
  const std::vector<Block>& g_blocks() const { return bg_; }
  const std::vector<Block>& h_blocks() const { return bh_; }
  const CharSubsets& g_subsets() const { return sg_; }
  const CharSubsets& h_subsets() const { return sh_; }
  const Restriction& res() const { return *res_; }
  const IntLattice& i_g() const { return ig_; }
  const IntLattice& i_h() const { return ih_; }
  const ModularReduction& reduction_g() const { return red_g_; }
  bool degenerate() const { return P_.size() == 1; }

  // Coefficient-space maps.
  IntVec restrict_vec(const IntVec& chi) const;
  IntVec induce_vec(const IntVec& phi) const;
  IntVec proj_p(const IntVec& phi) const;  // onto Irr(H, P)

  // Blocks b of G with defect group conjugate to P, paired with the block e of
  // H having the same defect and e^G = b.
  std::vector<std::pair<std::size_t, std::size_t>> block_pairs() const;
  std::optional<std::size_t> correspondent_of(std::size_t g_block) const;

  QuotientReport quotients() const;
  // level = nullopt for the global property, else a block of G with defect
  // group P.
  Verdict check(Property prop, std::optional<std::size_t> g_block = std::nullopt) const;

  // Theorem checks.
  bool theorem26_selftest(std::string* why = nullptr) const;
  bool block_split_check(std::string* why = nullptr) const;
  bool degree_congruences(const Verdict& v, std::string* why = nullptr) const;

  struct MlTable {
    std::map<int, int> g, h;
    std::uint64_t m = 1;
    bool equal = false;
  };
  MlTable isaacs_navarro(std::optional<std::size_t> g_block = std::nullopt) const;

 private:
  Analysis() = default;
  void compute(bool with_lattices);

  FiniteGroup::Ptr g_, h_;
  std::uint64_t p_ = 2;
  IndexSet P_, P_h_, H_;
  IntersectionSetMaxima s_;
  std::vector<IndexSet> s_h_;
  ModularReduction red_g_, red_h_;
  std::vector<Block> bg_, bh_;
  CharSubsets sg_, sh_;
  std::unique_ptr<Restriction> res_;
  IntLattice ig_, ih_;
  std::vector<std::optional<std::size_t>> corr_;  // block of H -> block of G
};

// Lexicographically least perfect matching of left vertices 0..n-1 onto
// right vertices 0..m-1, or nullopt.
std::optional<std::vector<std::size_t>> least_perfect_matching(const std::vector<std::vector<char>>& adj,
                                                               std::size_t right);

// Virtual characters over G x H in the product table's indexing.
IntVec omega(const Analysis& a, std::size_t g_block, std::size_t h_block);
IntVec dual_product(const IntVec& mu, const CharTable& tg, const CharTable& th);
IntVec mu_induce(const IntVec& mu, const CharTable& tg, const CharTable& th, std::size_t phi);
IntVec mu_restrict(const IntVec& mu, const CharTable& tg, const CharTable& th, std::size_t chi);

struct PropertyGResult {
  bool holds = false;
  bool congruence = false;   // mu - omega in the diagonal induced lattice
  bool constituents = false; // the height-zero constituent condition
  std::string detail;
};
// `product` must be FiniteGroup::direct_product(G, H).
// Span of inductions from qualifying elementary subgroups of G x H, where the
// intersection set is replaced by the diagonal copies of its maxima.
IntLattice diagonal_induced_lattice(const Analysis& a, const FiniteGroup::Ptr& product);
// `diag` may carry a precomputed diagonal_induced_lattice.
PropertyGResult check_property_G(const Analysis& a, std::size_t g_block, const FiniteGroup::Ptr& product,
                                 const IntVec& mu, const IntLattice* diag = nullptr);

// Regular action of G/N on right cosets of the normal subgroup N. Returns the
// quotient and a map from G's element indices to the quotient's table.
struct QuotientGroup {
  FiniteGroup::Ptr group;
  std::vector<std::uint32_t> image;
};
QuotientGroup quotient_by_normal(const FiniteGroup& g, const IndexSet& n);

}  // namespace indres
