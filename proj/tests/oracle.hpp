#ifndef XTL_TESTS_ORACLE_HPP
#define XTL_TESTS_ORACLE_HPP

#include <set>
#include <string>
#include <vector>

#include "test_support.hpp"
#include "xtl/derivatives.hpp"
#include "xtl/doc_node.hpp"
#include "xtl/mapping.hpp"
#include "xtl/reg.hpp"

namespace xtltest {

// ---------------------------------------------------------------------------
// Brute-force language oracle for the validator.
//
// Instances live here as canonical hedges: ordered lists of items where no
// text item is empty and no two text items are adjacent - exactly what
// parsing a serialized document yields. The oracle computes the (bounded)
// language of a schema expression by direct enumeration and never calls the
// matcher.
// ---------------------------------------------------------------------------

struct Item;
using Hedge = std::vector<Item>;

struct Item {
  bool is_text = false;
  std::string text;                 // text item
  std::string name;                 // element item
  std::vector<xtl::Attribute> attrs;  // element item, sorted by name
  Hedge children;

  static Item text_item(std::string t);
  static Item element(std::string name, std::vector<xtl::Attribute> attrs = {},
                      Hedge children = {});

  bool operator==(const Item& o) const;
  bool operator<(const Item& o) const;
};

// Concatenation with text merging at the seam.
Hedge concat(Hedge a, const Hedge& b);

// Merges adjacent text items and drops empty ones.
Hedge canonical_hedge(Hedge h);

// Element count plus total text length; bounds how often a repetition can
// contribute to a hedge.
int atoms(const Hedge& h);

struct EnumParams {
  int max_atoms = 14;
  int star_unroll = 14;
  int macro_depth = 4;
  std::vector<std::string> text_pool;  // candidate strings for text slots
  size_t max_set = 200000;             // enumeration blow-up guard
};

struct OracleOverflow {};

// Exact bounded language: every member hedge with atoms(h) <= max_atoms is
// in the result, nothing else is. Throws OracleOverflow when the set grows
// past max_set.
std::set<Hedge> enumerate_language(const xtl::RegPtr& schema, const xtl::RegMacroEnv& env,
                                   const EnumParams& params);

// Membership with bounds scaled to the candidate hedge.
bool oracle_member(const Hedge& h, const xtl::RegPtr& schema, const xtl::RegMacroEnv& env,
                   EnumParams params);

// Second, enumeration-free membership oracle: memoized dynamic programming
// over token ranges of the hedge (elements as atomic tokens, text expanded
// to characters). Handles fixtures whose strings are too long to enumerate.
bool member_hedge(const Hedge& h, const xtl::RegPtr& schema, const xtl::RegMacroEnv& env,
                  int macro_depth = 64);

// Conversions between the oracle's hedges and the library models.
Item doc_to_item(const xtl::DocNode& node);
xtl::DocNode item_to_doc(const Item& item);
xtl::RegPtr item_to_reg(const Item& item, Rng* shuffle_attrs = nullptr);
xtl::RegPtr hedge_to_instance_reg(const Hedge& h);

// ---------------------------------------------------------------------------
// Bounded schema family generator (criterion: matcher agrees with the
// enumeration oracle). Star and Or bodies produce element-edged hedges and
// text slots appear only as the full content of an element, mirroring how
// the command tags are used in practice; text literals stay in plain
// element content.
// ---------------------------------------------------------------------------

struct GeneratedSchema {
  xtl::RegPtr root;          // an element expression
  xtl::RegMacroEnv macros;
  std::vector<std::string> text_pool;
};

GeneratedSchema random_schema(Rng& rng);

// Structure-preserving mutations used to produce near-miss instances.
Item mutate_instance(const Item& root, Rng& rng);

// ---------------------------------------------------------------------------
// Independent membership oracle for string regular expressions.
// ---------------------------------------------------------------------------

bool regex_member(const xtl::SRegexPtr& r, const std::string& word);

// Uniform-ish random regex over {x, y} with exactly `size` nodes.
xtl::SRegexPtr random_sregex(Rng& rng, int size);

// All regexes over {x, y} with at most `size` nodes.
std::vector<xtl::SRegexPtr> all_sregex_up_to(int size);

}  // namespace xtltest

#endif  // XTL_TESTS_ORACLE_HPP
