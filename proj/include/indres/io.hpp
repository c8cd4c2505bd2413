#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "indres/blocks.hpp"
#include "indres/char_table.hpp"
#include "indres/classfun.hpp"
#include "indres/correspondence.hpp"
#include "indres/fixtures.hpp"
#include "indres/lattice.hpp"

namespace indres::io {

using json = nlohmann::ordered_json;

// Files use 1-based points, class indices and character indices. Integers
// that may exceed 64 bits are written as decimal strings; readers accept
// either strings or JSON integers.

json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);
std::string dump(const json& j);  // two-space indent, trailing newline

json group_to_json(const GroupSpec& g);
GroupSpec group_from_json(const json& j, const std::string& name = "");
GroupSpec load_group(const std::string& path);

// Generators of a subgroup given by element indices.
json subgroup_to_json(const ElementTable& t, const IndexSet& s);

json table_to_json(const CharTable& t);
// Re-verifies orthogonality (IntegrityError on failure).
CharTable table_from_json(const json& j, const std::string& id = "");
CharTable load_table(const std::string& path);

json vchar_to_json(const VirtualCharacter& v);
VirtualCharacter vchar_from_json(const json& j);

json invariants_to_json(const QuotientInvariants& q);
json block_to_json(const Block& b, std::uint64_t p, std::optional<std::size_t> correspondent);
json blocks_to_json(const FiniteGroup& g, std::uint64_t p, const std::vector<Block>& blocks);

struct VerifyRequest {
  std::vector<std::string> props;      // irc, wirc, wircstar, pres, pind, in, g
  std::optional<std::size_t> block;    // block of G, 0-based
  std::optional<VirtualCharacter> witness;
};

struct VerifyOutcome {
  json report;
  bool all_hold = true;
};

// Throws PreconditionError for invalid requests (unknown property, "g"
// without witness and block, block without a correspondent).
VerifyOutcome build_report(const Analysis& a, const VerifyRequest& req);

// "G, p | Q1 | IRC | Q2" with bracket components written as [..] + [..]
// when more than one block has defect group P.
std::string table_row(const std::string& label, const QuotientReport& q, bool irc);
std::string bracket_string(const std::vector<QuotientInvariants>& v);

json error_record(const std::string& kind, const std::string& message);

}  // namespace indres::io
