#ifndef XTL_XTL_NODE_HPP
#define XTL_XTL_NODE_HPP

#include <string>
#include <utility>
#include <vector>

#include "xtl/doc_node.hpp"

namespace xtl {

// Nine-constructor term model of XTL documents. The seven command tags plus
// plain element and text nodes. A hedge is a std::vector<XtlNode>.
struct XtlNode {
  enum class Kind {
    Attribute,  // xtl:attribute  (name, select)
    TextSlot,   // xtl:text       (select)
    Include,    // xtl:include    (select)
    Macro,      // xtl:macro      (name, body)
    CallMacro,  // xtl:call-macro (name)
    If,         // xtl:if         (select, body)
    ForEach,    // xtl:for-each   (select, body)
    Element,    // plain element  (name, attributes, children)
    Text,       // plain text     (text)
  };

  Kind kind = Kind::Element;
  std::string name;                   // Attribute / Macro / CallMacro / Element
  std::string select;                 // Attribute / TextSlot / Include / If / ForEach
  std::string text;                   // Text
  std::vector<Attribute> attributes;  // Element
  std::vector<XtlNode> children;      // Macro / If / ForEach body, Element children

  static XtlNode attribute(std::string name, std::string select) {
    XtlNode n;
    n.kind = Kind::Attribute;
    n.name = std::move(name);
    n.select = std::move(select);
    return n;
  }
  static XtlNode text_slot(std::string select) {
    XtlNode n;
    n.kind = Kind::TextSlot;
    n.select = std::move(select);
    return n;
  }
  static XtlNode include(std::string select) {
    XtlNode n;
    n.kind = Kind::Include;
    n.select = std::move(select);
    return n;
  }
  static XtlNode macro(std::string name, std::vector<XtlNode> body) {
    XtlNode n;
    n.kind = Kind::Macro;
    n.name = std::move(name);
    n.children = std::move(body);
    return n;
  }
  static XtlNode call_macro(std::string name) {
    XtlNode n;
    n.kind = Kind::CallMacro;
    n.name = std::move(name);
    return n;
  }
  static XtlNode if_node(std::string select, std::vector<XtlNode> body) {
    XtlNode n;
    n.kind = Kind::If;
    n.select = std::move(select);
    n.children = std::move(body);
    return n;
  }
  static XtlNode for_each(std::string select, std::vector<XtlNode> body) {
    XtlNode n;
    n.kind = Kind::ForEach;
    n.select = std::move(select);
    n.children = std::move(body);
    return n;
  }
  static XtlNode element(std::string name, std::vector<Attribute> attrs = {},
                         std::vector<XtlNode> children = {}) {
    XtlNode n;
    n.kind = Kind::Element;
    n.name = std::move(name);
    n.attributes = std::move(attrs);
    n.children = std::move(children);
    return n;
  }
  static XtlNode text_node(std::string t) {
    XtlNode n;
    n.kind = Kind::Text;
    n.text = std::move(t);
    return n;
  }

  bool is_command() const {
    return kind != Kind::Element && kind != Kind::Text;
  }

  bool operator==(const XtlNode& o) const {
    return kind == o.kind && name == o.name && select == o.select &&
           text == o.text && attributes == o.attributes && children == o.children;
  }
  bool operator!=(const XtlNode& o) const { return !(*this == o); }
};

// Constructor-style notation, e.g. ElX "a" [("id","1")] [ElX "b" [] []].
std::string to_debug_string(const XtlNode& node);
std::string to_debug_string(const std::vector<XtlNode>& hedge);

}  // namespace xtl

#endif  // XTL_XTL_NODE_HPP
