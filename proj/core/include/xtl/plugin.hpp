#ifndef XTL_PLUGIN_HPP
#define XTL_PLUGIN_HPP

#include <any>
#include <optional>
#include <string>
#include <vector>

#include "xtl/doc_node.hpp"

namespace xtl {

// Opaque handle to instantiation data. The engine never inspects it; it is
// created by a plugin and handed back to the same plugin.
using Context = std::any;

// Placeholder plugin: the four evaluation functions over select expressions.
// Implementations must be referentially transparent within one run: equal
// arguments yield equal results.
class Plugin {
public:
  virtual ~Plugin() = default;

  // Text for xtl:text and xtl:attribute values.
  virtual std::string eval_text(const std::string& select, const Context& ctx) const = 0;

  // Iteration contexts for xtl:for-each, in document order.
  virtual std::vector<Context> eval_nodes(const std::string& select, const Context& ctx) const = 0;

  // Condition for xtl:if.
  virtual bool eval_bool(const std::string& select, const Context& ctx) const = 0;

  // One well-formed element node or none, for xtl:include.
  virtual std::optional<DocNode> eval_include(const std::string& select, const Context& ctx) const = 0;
};

}  // namespace xtl

#endif  // XTL_PLUGIN_HPP
