#ifndef XTL_MAPPING_HPP
#define XTL_MAPPING_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "xtl/doc_node.hpp"
#include "xtl/errors.hpp"
#include "xtl/reg.hpp"
#include "xtl/xtl_node.hpp"

namespace xtl {

// Macro environments keep document order; lookups of unbound names fail,
// never default.
template <typename Body>
struct MacroEnv {
  std::vector<std::pair<std::string, Body>> entries;

  const Body* find(const std::string& name) const {
    for (const auto& [n, body] : entries)
      if (n == name) return &body;
    return nullptr;
  }
  bool bind(std::string name, Body body) {
    if (find(name)) return false;
    entries.emplace_back(std::move(name), std::move(body));
    return true;
  }
};

using XtlMacroEnv = MacroEnv<std::vector<XtlNode>>;
using RegMacroEnv = MacroEnv<RegPtr>;

// True iff the element is one of the seven command tags: prefix is exactly
// "xtl" and the local name is a known command. Other xtl-prefixed elements
// are treated as ordinary elements.
bool is_command_tag(const QName& name);

// Maps a document tree onto the XTL term model. Recognized command tags must
// carry their required attribute (`name` for macro/attribute/call-macro,
// `select` for text/include/if/for-each, both for xtl:attribute); otherwise
// MappingError is thrown. Macro bodies must not contain macro definitions.
XtlNode doc_to_xtl(const DocNode& node);

// Exact inverse of doc_to_xtl on its image: command constructors re-emit
// their xtl:* element forms.
DocNode xtl_to_doc(const XtlNode& node);

// Splits a top-level hedge into (macro environment, remaining nodes in
// original order). Throws DuplicateMacroError on repeated macro names.
std::pair<XtlMacroEnv, std::vector<XtlNode>> extract_macros(const std::vector<XtlNode>& hedge);

// Maps one non-macro XTL node onto Reg. Element content becomes the
// right-nested Then chain terminated by Epsilon; loop/condition/macro bodies
// of exactly one node map to that node directly. Throws UnmappableNodeError
// on macro definitions.
RegPtr xtl_to_reg(const XtlNode& node);

// Right-nested Then chain over the mapped hedge, terminated by Epsilon.
RegPtr hedge_to_reg(const std::vector<XtlNode>& hedge);

// Body encoding used for Star/Or/macro bodies: single-node bodies collapse
// to the node itself, everything else is a chain.
RegPtr body_to_reg(const std::vector<XtlNode>& hedge);

// Reg macro environment for a schema hedge, mapped eagerly.
std::pair<RegMacroEnv, std::vector<XtlNode>> extract_macros_reg(const std::vector<XtlNode>& hedge);

// Rewrites a Reg term into normal form: re-associates Then/Or to the right,
// removes Epsilon left children, terminates chains with Epsilon, merges text
// literals when one side is empty, drops empty text literals and moves
// attribute items to the front of element content chains. Idempotent and
// language-preserving. Throws NormalizeError when two non-empty text
// literals end up adjacent.
RegPtr normalize_reg(const RegPtr& r);

}  // namespace xtl

#endif  // XTL_MAPPING_HPP
