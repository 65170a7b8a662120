#ifndef XTL_INSTANTIATE_HPP
#define XTL_INSTANTIATE_HPP

#include <vector>

#include "xtl/mapping.hpp"
#include "xtl/plugin.hpp"
#include "xtl/xtl_node.hpp"

namespace xtl {

struct InstantiateOptions {
  // Bounds nested macro-call expansion; left-recursive macros are not
  // decidable in general, so a runtime guard stops them.
  int max_macro_depth = 512;
};

// Runs the full instantiation pipeline on a template term whose root must be
// an element. Attribute tags directly under the root are folded into the
// root's attribute list first (new values replace same-named entries, the
// list is sorted ascending), then root-level macros are collected and the
// remaining children are instantiated. The result contains only element and
// text constructors.
XtlNode instantiate_start(const XtlNode& tmpl, const Context& ctx,
                          const Plugin& plugin, const InstantiateOptions& opts = {});

// Single-node entry: text and attribute tags pass through unchanged; an
// element has its macro definitions extracted and its remaining children
// instantiated.
XtlNode instantiate_node(const XtlNode& node, const Context& ctx,
                         const Plugin& plugin, const InstantiateOptions& opts = {});

// Core per-node instantiation; returns the replacement hedge. `node` must
// not be a macro definition.
std::vector<XtlNode> instantiate_alpha(const XtlNode& node, const Context& ctx,
                                       const XtlMacroEnv& env, const Plugin& plugin,
                                       const InstantiateOptions& opts = {});

// Macro body lookup; throws UnboundMacroError.
const std::vector<XtlNode>& get_macro(const std::string& name, const XtlMacroEnv& env);

}  // namespace xtl

#endif  // XTL_INSTANTIATE_HPP
