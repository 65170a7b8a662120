#ifndef XTL_QUERY_HPP
#define XTL_QUERY_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "xtl/doc_node.hpp"
#include "xtl/errors.hpp"
#include "xtl/plugin.hpp"

namespace xtl {

// Parsed select expression of the small path-query language:
//
//   select    := 'true' | INTEGER | position-test | path
//   path      := '/' | ['//'] step ('/' step)* [predicate]
//   step      := NAME | '.' | '@'NAME          (@ only as the last step)
//   predicate := '[position()==' K ']' | '[position() mod' N '=' R ']'
//   position-test := 'position()==' K | 'position() mod' N '=' R
//
// A leading '//' searches elements anywhere in the document (pre-order,
// descendant-or-self of the root); a bare NAME steps to children of the
// context node.
struct PathExpr {
  enum class Kind { Literal, True, PositionTest, Path };

  struct PositionPred {
    bool modulo = false;  // false: position()==value; true: position() mod divisor = value
    int divisor = 0;
    int value = 0;
  };

  Kind kind = Kind::Path;
  std::string literal;               // Literal: the digits
  std::optional<PositionPred> test;  // PositionTest
  bool from_root = false;            // Path: leading '//'
  bool root_only = false;            // Path: the expression '/'
  std::vector<std::string> steps;    // Path: element names or "."
  std::optional<std::string> attr;   // Path: trailing @attr
  std::optional<PositionPred> pred;  // Path: trailing predicate
};

PathExpr parse_path(const std::string& select);

// Reference plugin over an in-memory document. Contexts carry a node of the
// held document plus a 1-based position within the match list that produced
// them.
class DocQueryPlugin : public Plugin {
public:
  explicit DocQueryPlugin(DocNode doc);

  Context root_context() const;

  std::string eval_text(const std::string& select, const Context& ctx) const override;
  std::vector<Context> eval_nodes(const std::string& select, const Context& ctx) const override;
  bool eval_bool(const std::string& select, const Context& ctx) const override;
  std::optional<DocNode> eval_include(const std::string& select, const Context& ctx) const override;

private:
  std::shared_ptr<const DocNode> doc_;
};

// Matching nodes in document pre-order, with positions assigned 1..n.
std::vector<Context> eval_path(const PathExpr& expr, const Context& ctx);

// Concatenation, in pre-order, of all text under the context node; for
// @attr contexts the attribute value or the empty string.
std::string text_value(const Context& ctx);

}  // namespace xtl

#endif  // XTL_QUERY_HPP
