#ifndef XTL_REG_HPP
#define XTL_REG_HPP

#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "xtl/doc_node.hpp"

namespace xtl {

struct Reg;
using RegPtr = std::shared_ptr<const Reg>;

// Regular hedge-expression model. Nodes are immutable and shared; `hash` is a
// structural hash computed at construction so validator memoization stays cheap.
//
// Normal form (see is_normal):
//   - Then and Or are right-associative,
//   - the left child of a Then is never Epsilon,
//   - no two text literals are adjacent in a Then chain,
//   - attribute items form a contiguous prefix of an element's content chain,
//   - every Then chain ends in Epsilon on its right spine.
struct Reg {
  enum class Kind {
    Macro,     // MacroR name
    Attr,      // AttrR name select
    TextSlot,  // TextR select
    Include,   // IncludeR select
    Element,   // ElR name attrs content
    Literal,   // TxtR text
    Epsilon,
    Or,        // Or left right
    Then,      // Then left right
    Star,      // Star body
  };

  Kind kind;
  std::string name;                   // Macro / Attr / Element
  std::string select;                 // Attr / TextSlot / Include
  std::string text;                   // Literal
  std::vector<Attribute> attributes;  // Element
  RegPtr left;                        // Or / Then left, Element content, Star body
  RegPtr right;                       // Or / Then right
  size_t hash = 0;

  explicit Reg(Kind k) : kind(k) {}
};

RegPtr reg_macro(std::string name);
RegPtr reg_attr(std::string name, std::string select);
RegPtr reg_text_slot(std::string select);
RegPtr reg_include(std::string select);
RegPtr reg_element(std::string name, std::vector<Attribute> attrs, RegPtr content);
RegPtr reg_literal(std::string text);
RegPtr reg_epsilon();  // shared singleton
RegPtr reg_or(RegPtr left, RegPtr right);
RegPtr reg_then(RegPtr left, RegPtr right);
RegPtr reg_star(RegPtr body);

bool reg_equal(const RegPtr& a, const RegPtr& b);

// Builds the right-nested Then chain items[0] . items[1] ... terminated by
// Epsilon. An empty list yields Epsilon.
RegPtr reg_chain(const std::vector<RegPtr>& items);

// Top-level items of a normal-form Then chain (empty for Epsilon).
std::vector<RegPtr> chain_items(const RegPtr& chain);

bool is_normal(const RegPtr& r);

// Constructor-style notation, e.g. Then (ElR "b" [] Epsilon) Epsilon.
std::string to_debug_string(const RegPtr& r);

// Parses the notation produced by to_debug_string; used for test fixtures
// and documented with the --dump-reg flag.
RegPtr parse_reg_debug(const std::string& input);

}  // namespace xtl

#endif  // XTL_REG_HPP
