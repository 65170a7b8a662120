#include "xtl/xtl_node.hpp"

namespace xtl {

namespace {

void quote_into(const std::string& s, std::string& out) {
  out.push_back('"');
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
}

void attrs_into(const std::vector<Attribute>& attrs, std::string& out) {
  out.push_back('[');
  for (size_t i = 0; i < attrs.size(); ++i) {
    if (i) out.push_back(',');
    out.push_back('(');
    quote_into(attrs[i].first, out);
    out.push_back(',');
    quote_into(attrs[i].second, out);
    out.push_back(')');
  }
  out.push_back(']');
}

void debug_into(const XtlNode& n, std::string& out);

void hedge_into(const std::vector<XtlNode>& hedge, std::string& out) {
  out.push_back('[');
  for (size_t i = 0; i < hedge.size(); ++i) {
    if (i) out += ", ";
    debug_into(hedge[i], out);
  }
  out.push_back(']');
}

void debug_into(const XtlNode& n, std::string& out) {
  switch (n.kind) {
    case XtlNode::Kind::Attribute:
      out += "XAtt ";
      quote_into(n.name, out);
      out.push_back(' ');
      quote_into(n.select, out);
      break;
    case XtlNode::Kind::TextSlot:
      out += "XTxt ";
      quote_into(n.select, out);
      break;
    case XtlNode::Kind::Include:
      out += "XInclude ";
      quote_into(n.select, out);
      break;
    case XtlNode::Kind::Macro:
      out += "XMacro ";
      quote_into(n.name, out);
      out.push_back(' ');
      hedge_into(n.children, out);
      break;
    case XtlNode::Kind::CallMacro:
      out += "XCallMacro ";
      quote_into(n.name, out);
      break;
    case XtlNode::Kind::If:
      out += "XIf ";
      quote_into(n.select, out);
      out.push_back(' ');
      hedge_into(n.children, out);
      break;
    case XtlNode::Kind::ForEach:
      out += "XForEach ";
      quote_into(n.select, out);
      out.push_back(' ');
      hedge_into(n.children, out);
      break;
    case XtlNode::Kind::Element:
      out += "ElX ";
      quote_into(n.name, out);
      out.push_back(' ');
      attrs_into(n.attributes, out);
      out.push_back(' ');
      hedge_into(n.children, out);
      break;
    case XtlNode::Kind::Text:
      out += "TxtX ";
      quote_into(n.text, out);
      break;
  }
}

}  // namespace

std::string to_debug_string(const XtlNode& node) {
  std::string out;
  debug_into(node, out);
  return out;
}

std::string to_debug_string(const std::vector<XtlNode>& hedge) {
  std::string out;
  hedge_into(hedge, out);
  return out;
}

}  // namespace xtl
