#ifndef XTL_DOC_NODE_HPP
#define XTL_DOC_NODE_HPP

#include <string>
#include <utility>
#include <vector>

namespace xtl {

// Attribute entry: (name, value). Source order is kept by the parser;
// only canonicalize() sorts.
using Attribute = std::pair<std::string, std::string>;

// Qualified name. Prefixes are recorded verbatim; no URI resolution happens,
// so `uri` stays empty unless a caller fills it in.
struct QName {
  std::string prefix;
  std::string local;
  std::string uri;

  QName() = default;
  QName(std::string prefix_, std::string local_, std::string uri_ = "")
      : prefix(std::move(prefix_)), local(std::move(local_)), uri(std::move(uri_)) {}

  // "prefix:local", or just "local" when there is no prefix.
  std::string full() const {
    return prefix.empty() ? local : prefix + ":" + local;
  }

  // Splits at the first ':'.
  static QName from_full(const std::string& full);

  bool operator==(const QName& o) const {
    return prefix == o.prefix && local == o.local && uri == o.uri;
  }
  bool operator!=(const QName& o) const { return !(*this == o); }
};

// Generic XML tree node: an element with attributes and a child hedge, or a
// text node. All values are immutable by convention after construction.
struct DocNode {
  enum class Kind { Element, Text };

  Kind kind = Kind::Element;
  QName name;                         // Element only
  std::vector<Attribute> attributes;  // Element only
  std::vector<DocNode> children;      // Element only
  std::string text;                   // Text only

  static DocNode element(QName name, std::vector<Attribute> attrs = {},
                         std::vector<DocNode> children = {}) {
    DocNode n;
    n.kind = Kind::Element;
    n.name = std::move(name);
    n.attributes = std::move(attrs);
    n.children = std::move(children);
    return n;
  }

  static DocNode element(const std::string& full_name,
                         std::vector<Attribute> attrs = {},
                         std::vector<DocNode> children = {}) {
    return element(QName::from_full(full_name), std::move(attrs), std::move(children));
  }

  static DocNode text_node(std::string t) {
    DocNode n;
    n.kind = Kind::Text;
    n.text = std::move(t);
    return n;
  }

  bool is_element() const { return kind == Kind::Element; }
  bool is_text() const { return kind == Kind::Text; }

  bool operator==(const DocNode& o) const {
    if (kind != o.kind) return false;
    if (kind == Kind::Text) return text == o.text;
    return name == o.name && attributes == o.attributes && children == o.children;
  }
  bool operator!=(const DocNode& o) const { return !(*this == o); }
};

}  // namespace xtl

#endif  // XTL_DOC_NODE_HPP
