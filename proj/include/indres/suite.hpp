#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "indres/correspondence.hpp"
#include "indres/lattice.hpp"

namespace indres {

// One published row: group, prime, choice of P and the recorded outcome.
struct ReferenceRow {
  std::string group;
  std::uint64_t p = 2;
  // 0 means Sylow; otherwise P is the defect group of the first block of G
  // whose defect group has this order.
  std::uint64_t defect_group_order = 0;
  std::string p_label;                    // "Sylow", "C2xC2", ...
  std::vector<QuotientInvariants> q1, q2;  // bracket components
  bool irc = true;
  std::string table;                      // "1", "2" or "3"
  std::string suite;                      // "small" or "extended"
};

// Rows of the given suite ("small", "extended" or "all").
std::vector<ReferenceRow> reference_rows(const std::string& suite);

struct RowOutcome {
  ReferenceRow row;
  std::unique_ptr<Analysis> analysis;
  QuotientReport q;
  std::map<std::string, Verdict> verdicts;  // irc, wirc, wircstar, pres, pind
  bool match = false;                      // q1, q2 and irc agree with the row
  double seconds = 0;
  std::string rendered;                    // "G, p [P] | Q1 | IRC | Q2"
  std::string expected;
};

// Builds the group by name (or takes `g` when given), selects P, uses
// H = N_G(P) and evaluates quotients and all five properties.
RowOutcome run_reference_row(const ReferenceRow& row, FiniteGroup::Ptr g = nullptr);

// Parses "Z^2", "Z/2", "Z/7 + Z^5", "0".
QuotientInvariants parse_invariants(const std::string& s);
bool same_components(std::vector<QuotientInvariants> a, std::vector<QuotientInvariants> b);

// Selects P for a row: Sylow or the defect group of a block.
IndexSet select_p(const FiniteGroup& g, std::uint64_t p, std::uint64_t defect_group_order);

// omega(G, b, H) - X x conj(Y) with X = sum over chi in b of (chi(1)/d) chi and
// Y = sum over psi in the correspondent e of psi(1) psi. When every
// character of b lies over a G-invariant chi0 of a normal subgroup L with
// G/L = P, chi0(1) = d and Res_L^H of e's characters covering phi, X is
// Ind_L^G chi0 and Y is phi x rho_P.
IntVec extension_witness(const Analysis& a, std::size_t g_block, std::uint64_t d);

}  // namespace indres
