#include "xtl/xml.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace xtl {

QName QName::from_full(const std::string& full) {
  auto pos = full.find(':');
  if (pos == std::string::npos) return QName("", full);
  return QName(full.substr(0, pos), full.substr(pos + 1));
}

namespace {

bool is_name_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' ||
         c == '.' || c == ':';
}

bool all_whitespace(const std::string& s) {
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
}

class Parser {
public:
  explicit Parser(const std::string& input) : in_(input) {}

  DocNode run() {
    skip_whitespace();
    if (eof()) fail("empty input");
    if (peek() != '<') fail("stray text at top level");
    DocNode root = parse_element();
    skip_whitespace();
    if (!eof()) {
      if (peek() == '<') fail("multiple root elements");
      fail("stray text after root element");
    }
    return root;
  }

private:
  const std::string& in_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;

  bool eof() const { return pos_ >= in_.size(); }
  char peek() const { return in_[pos_]; }
  bool peek_is(const char* s) const { return in_.compare(pos_, std::string::traits_type::length(s), s) == 0; }

  char advance() {
    char c = in_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(line_, col_, msg);
  }

  void skip_whitespace() {
    while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }

  void expect(char c) {
    if (eof() || peek() != c) fail(std::string("expected '") + c + "'");
    advance();
  }

  std::string parse_name() {
    if (eof() || !is_name_start(peek())) fail("expected a name");
    std::string name;
    while (!eof() && is_name_char(peek())) name.push_back(advance());
    return name;
  }

  std::string parse_entity() {
    // positioned after '&'
    std::string ent;
    while (!eof() && peek() != ';') {
      ent.push_back(advance());
      if (ent.size() > 6) break;
    }
    if (eof() || peek() != ';') fail("unterminated entity reference");
    advance();
    if (ent == "lt") return "<";
    if (ent == "gt") return ">";
    if (ent == "amp") return "&";
    if (ent == "quot") return "\"";
    if (ent == "apos") return "'";
    fail("unknown entity '&" + ent + ";'");
  }

  std::string parse_attr_value() {
    expect('"');
    std::string value;
    while (true) {
      if (eof()) fail("unterminated attribute value");
      char c = peek();
      if (c == '"') {
        advance();
        return value;
      }
      if (c == '<') fail("'<' in attribute value");
      if (c == '&') {
        advance();
        value += parse_entity();
      } else {
        value.push_back(advance());
      }
    }
  }

  DocNode parse_element() {
    expect('<');
    if (!eof() && (peek() == '!' || peek() == '?'))
      fail("comments, CDATA, DOCTYPE and processing instructions are not supported");
    std::string name = parse_name();
    std::vector<Attribute> attrs;
    std::set<std::string> seen;
    while (true) {
      bool had_space = !eof() && std::isspace(static_cast<unsigned char>(peek()));
      skip_whitespace();
      if (eof()) fail("unterminated start tag <" + name);
      if (peek() == '/') {
        advance();
        expect('>');
        return DocNode::element(name, std::move(attrs));
      }
      if (peek() == '>') {
        advance();
        break;
      }
      if (!had_space) fail("expected whitespace before attribute");
      std::string aname = parse_name();
      if (!seen.insert(aname).second)
        fail("duplicate attribute '" + aname + "' in <" + name + ">");
      skip_whitespace();
      expect('=');
      skip_whitespace();
      attrs.emplace_back(aname, parse_attr_value());
    }

    std::vector<DocNode> children;
    std::string run;  // current raw character run
    auto flush_text = [&]() {
      if (!run.empty() && !all_whitespace(run))
        children.push_back(DocNode::text_node(run));
      run.clear();
    };
    while (true) {
      if (eof()) fail("unclosed element <" + name + ">");
      char c = peek();
      if (c == '<') {
        if (pos_ + 1 < in_.size() && in_[pos_ + 1] == '/') {
          flush_text();
          advance();
          advance();
          std::string close = parse_name();
          if (close != name)
            fail("mismatched closing tag </" + close + ">, expected </" + name + ">");
          skip_whitespace();
          expect('>');
          return DocNode::element(name, std::move(attrs), std::move(children));
        }
        flush_text();
        children.push_back(parse_element());
      } else if (c == '&') {
        advance();
        run += parse_entity();
      } else {
        run.push_back(advance());
      }
    }
  }
};

void escape_into(const std::string& s, std::string& out) {
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out.push_back(c);
    }
  }
}

void serialize_into(const DocNode& node, std::string& out) {
  if (node.is_text()) {
    escape_into(node.text, out);
    return;
  }
  out.push_back('<');
  out += node.name.full();
  for (const auto& [k, v] : node.attributes) {
    out.push_back(' ');
    out += k;
    out += "=\"";
    escape_into(v, out);
    out.push_back('"');
  }
  if (node.children.empty()) {
    out += "/>";
    return;
  }
  out.push_back('>');
  for (const DocNode& child : node.children) serialize_into(child, out);
  out += "</";
  out += node.name.full();
  out.push_back('>');
}

}  // namespace

DocNode parse_document(const std::string& input) {
  return Parser(input).run();
}

std::string serialize_document(const DocNode& doc) {
  if (!doc.is_element())
    throw InvalidInputError("document root must be an element");
  std::string out;
  serialize_into(doc, out);
  return out;
}

DocNode canonicalize(const DocNode& doc) {
  if (doc.is_text()) return doc;
  DocNode out = doc;
  std::stable_sort(out.attributes.begin(), out.attributes.end(),
                   [](const Attribute& a, const Attribute& b) { return a.first < b.first; });
  for (DocNode& child : out.children) child = canonicalize(child);
  return out;
}

}  // namespace xtl
