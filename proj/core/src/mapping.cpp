#include "xtl/mapping.hpp"

#include <algorithm>
#include <functional>

namespace xtl {

namespace {

const char* kCommands[] = {"attribute", "text", "include", "macro",
                           "call-macro", "if", "for-each"};

std::string child_path(const std::string& parent, size_t index) {
  return parent + "/" + std::to_string(index);
}

std::optional<std::string> attr_value(const DocNode& el, const std::string& name) {
  for (const auto& [k, v] : el.attributes)
    if (k == name) return v;
  return std::nullopt;
}

std::string require_attr(const DocNode& el, const std::string& name,
                         const std::string& path) {
  auto v = attr_value(el, name);
  if (!v)
    throw MappingError(path, "<" + el.name.full() + "> requires attribute '" +
                                 name + "'");
  return *v;
}

void require_childless(const DocNode& el, const std::string& path) {
  if (!el.children.empty())
    throw MappingError(path, "<" + el.name.full() + "> must not have children");
}

XtlNode map_node(const DocNode& node, const std::string& path);

std::vector<XtlNode> map_children(const DocNode& el, const std::string& path) {
  std::vector<XtlNode> out;
  out.reserve(el.children.size());
  for (size_t i = 0; i < el.children.size(); ++i)
    out.push_back(map_node(el.children[i], child_path(path, i)));
  return out;
}

XtlNode map_node(const DocNode& node, const std::string& path) {
  if (node.is_text()) return XtlNode::text_node(node.text);
  if (is_command_tag(node.name)) {
    const std::string& cmd = node.name.local;
    if (cmd == "attribute") {
      std::string n = require_attr(node, "name", path);
      std::string s = require_attr(node, "select", path);
      require_childless(node, path);
      return XtlNode::attribute(n, s);
    }
    if (cmd == "text") {
      require_childless(node, path);
      return XtlNode::text_slot(require_attr(node, "select", path));
    }
    if (cmd == "include") {
      require_childless(node, path);
      return XtlNode::include(require_attr(node, "select", path));
    }
    if (cmd == "macro") {
      std::string n = require_attr(node, "name", path);
      auto body = map_children(node, path);
      for (const XtlNode& b : body)
        if (b.kind == XtlNode::Kind::Macro)
          throw MappingError(path, "macro '" + n + "' contains a nested macro definition");
      return XtlNode::macro(n, std::move(body));
    }
    if (cmd == "call-macro") {
      require_childless(node, path);
      return XtlNode::call_macro(require_attr(node, "name", path));
    }
    if (cmd == "if")
      return XtlNode::if_node(require_attr(node, "select", path), map_children(node, path));
    if (cmd == "for-each")
      return XtlNode::for_each(require_attr(node, "select", path), map_children(node, path));
  }
  return XtlNode::element(node.name.full(), node.attributes, map_children(node, path));
}

}  // namespace

bool is_command_tag(const QName& name) {
  if (name.prefix != "xtl") return false;
  for (const char* c : kCommands)
    if (name.local == c) return true;
  return false;
}

XtlNode doc_to_xtl(const DocNode& node) { return map_node(node, ""); }

namespace {

DocNode command_element(const std::string& local, std::vector<Attribute> attrs,
                        std::vector<DocNode> children = {}) {
  return DocNode::element(QName("xtl", local), std::move(attrs), std::move(children));
}

std::vector<DocNode> unmap_hedge(const std::vector<XtlNode>& hedge) {
  std::vector<DocNode> out;
  out.reserve(hedge.size());
  for (const XtlNode& n : hedge) out.push_back(xtl_to_doc(n));
  return out;
}

}  // namespace

DocNode xtl_to_doc(const XtlNode& node) {
  switch (node.kind) {
    case XtlNode::Kind::Attribute:
      return command_element("attribute", {{"name", node.name}, {"select", node.select}});
    case XtlNode::Kind::TextSlot:
      return command_element("text", {{"select", node.select}});
    case XtlNode::Kind::Include:
      return command_element("include", {{"select", node.select}});
    case XtlNode::Kind::Macro:
      return command_element("macro", {{"name", node.name}}, unmap_hedge(node.children));
    case XtlNode::Kind::CallMacro:
      return command_element("call-macro", {{"name", node.name}});
    case XtlNode::Kind::If:
      return command_element("if", {{"select", node.select}}, unmap_hedge(node.children));
    case XtlNode::Kind::ForEach:
      return command_element("for-each", {{"select", node.select}}, unmap_hedge(node.children));
    case XtlNode::Kind::Element:
      return DocNode::element(node.name, node.attributes, unmap_hedge(node.children));
    case XtlNode::Kind::Text:
      return DocNode::text_node(node.text);
  }
  throw InvalidInputError("corrupt XtlNode");
}

std::pair<XtlMacroEnv, std::vector<XtlNode>> extract_macros(const std::vector<XtlNode>& hedge) {
  XtlMacroEnv env;
  std::vector<XtlNode> rest;
  for (const XtlNode& n : hedge) {
    if (n.kind == XtlNode::Kind::Macro) {
      if (!env.bind(n.name, n.children)) throw DuplicateMacroError(n.name);
    } else {
      rest.push_back(n);
    }
  }
  return {std::move(env), std::move(rest)};
}

RegPtr xtl_to_reg(const XtlNode& node) {
  switch (node.kind) {
    case XtlNode::Kind::If:
      return reg_or(reg_epsilon(), body_to_reg(node.children));
    case XtlNode::Kind::ForEach:
      return reg_star(body_to_reg(node.children));
    case XtlNode::Kind::Attribute:
      return reg_attr(node.name, node.select);
    case XtlNode::Kind::TextSlot:
      return reg_text_slot(node.select);
    case XtlNode::Kind::Include:
      return reg_include(node.select);
    case XtlNode::Kind::Text:
      return reg_literal(node.text);
    case XtlNode::Kind::Element:
      return reg_element(node.name, node.attributes, hedge_to_reg(node.children));
    case XtlNode::Kind::CallMacro:
      return reg_macro(node.name);
    case XtlNode::Kind::Macro:
      throw UnmappableNodeError("macro definitions have no Reg form; extract them first");
  }
  throw InvalidInputError("corrupt XtlNode");
}

RegPtr hedge_to_reg(const std::vector<XtlNode>& hedge) {
  std::vector<RegPtr> items;
  items.reserve(hedge.size());
  for (const XtlNode& n : hedge) items.push_back(xtl_to_reg(n));
  return reg_chain(items);
}

RegPtr body_to_reg(const std::vector<XtlNode>& hedge) {
  if (hedge.size() == 1) return xtl_to_reg(hedge[0]);
  return hedge_to_reg(hedge);
}

std::pair<RegMacroEnv, std::vector<XtlNode>> extract_macros_reg(const std::vector<XtlNode>& hedge) {
  auto [envx, rest] = extract_macros(hedge);
  RegMacroEnv env;
  for (const auto& [name, body] : envx.entries)
    env.bind(name, normalize_reg(body_to_reg(body)));
  return {std::move(env), std::move(rest)};
}

namespace {

// Flattens an arbitrary Then tree into items, recursing into left-nested
// Then nodes and dropping Epsilons.
void flatten_then(const RegPtr& r, std::vector<RegPtr>& items) {
  if (r->kind == Reg::Kind::Then) {
    flatten_then(r->left, items);
    flatten_then(r->right, items);
  } else if (r->kind != Reg::Kind::Epsilon) {
    items.push_back(r);
  }
}

void flatten_or(const RegPtr& r, std::vector<RegPtr>& branches) {
  if (r->kind == Reg::Kind::Or) {
    flatten_or(r->left, branches);
    flatten_or(r->right, branches);
  } else {
    branches.push_back(r);
  }
}

RegPtr normalize_rec(const RegPtr& r, bool element_content) {
  switch (r->kind) {
    case Reg::Kind::Epsilon:
    case Reg::Kind::Macro:
    case Reg::Kind::Attr:
    case Reg::Kind::TextSlot:
    case Reg::Kind::Include:
      return r;
    case Reg::Kind::Literal:
      return r;
    case Reg::Kind::Element:
      return reg_element(r->name, r->attributes, normalize_rec(r->left, true));
    case Reg::Kind::Star:
      return reg_star(normalize_rec(r->left, false));
    case Reg::Kind::Or: {
      std::vector<RegPtr> branches;
      flatten_or(r, branches);
      RegPtr out = normalize_rec(branches.back(), false);
      for (auto it = std::next(branches.rbegin()); it != branches.rend(); ++it)
        out = reg_or(normalize_rec(*it, false), out);
      return out;
    }
    case Reg::Kind::Then: {
      std::vector<RegPtr> raw;
      flatten_then(r, raw);
      std::vector<RegPtr> items;
      for (const RegPtr& item : raw) {
        RegPtr n = normalize_rec(item, false);
        if (n->kind == Reg::Kind::Literal) {
          if (n->text.empty()) continue;  // identity for text concatenation
          if (!items.empty() && items.back()->kind == Reg::Kind::Literal)
            throw NormalizeError("adjacent non-empty text literals '" +
                                 items.back()->text + "' and '" + n->text + "'");
        }
        items.push_back(std::move(n));
      }
      if (element_content)
        std::stable_partition(items.begin(), items.end(), [](const RegPtr& i) {
          return i->kind == Reg::Kind::Attr;
        });
      return reg_chain(items);
    }
  }
  throw InvalidInputError("corrupt Reg");
}

}  // namespace

RegPtr normalize_reg(const RegPtr& r) { return normalize_rec(r, true); }

}  // namespace xtl
