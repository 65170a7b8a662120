#include "xtl/reg.hpp"

#include <cctype>
#include <functional>

#include "xtl/errors.hpp"

namespace xtl {

namespace {

size_t mix(size_t h, size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

size_t hash_string(const std::string& s) { return std::hash<std::string>{}(s); }

size_t compute_hash(const Reg& r) {
  size_t h = static_cast<size_t>(r.kind) * 1000003u;
  h = mix(h, hash_string(r.name));
  h = mix(h, hash_string(r.select));
  h = mix(h, hash_string(r.text));
  for (const auto& [k, v] : r.attributes) {
    h = mix(h, hash_string(k));
    h = mix(h, hash_string(v));
  }
  if (r.left) h = mix(h, r.left->hash);
  if (r.right) h = mix(h, r.right->hash);
  return h;
}

RegPtr finish(std::shared_ptr<Reg> r) {
  r->hash = compute_hash(*r);
  return r;
}

}  // namespace

RegPtr reg_macro(std::string name) {
  auto r = std::make_shared<Reg>(Reg::Kind::Macro);
  r->name = std::move(name);
  return finish(r);
}

RegPtr reg_attr(std::string name, std::string select) {
  auto r = std::make_shared<Reg>(Reg::Kind::Attr);
  r->name = std::move(name);
  r->select = std::move(select);
  return finish(r);
}

RegPtr reg_text_slot(std::string select) {
  auto r = std::make_shared<Reg>(Reg::Kind::TextSlot);
  r->select = std::move(select);
  return finish(r);
}

RegPtr reg_include(std::string select) {
  auto r = std::make_shared<Reg>(Reg::Kind::Include);
  r->select = std::move(select);
  return finish(r);
}

RegPtr reg_element(std::string name, std::vector<Attribute> attrs, RegPtr content) {
  auto r = std::make_shared<Reg>(Reg::Kind::Element);
  r->name = std::move(name);
  r->attributes = std::move(attrs);
  r->left = std::move(content);
  return finish(r);
}

RegPtr reg_literal(std::string text) {
  auto r = std::make_shared<Reg>(Reg::Kind::Literal);
  r->text = std::move(text);
  return finish(r);
}

RegPtr reg_epsilon() {
  static const RegPtr eps = finish(std::make_shared<Reg>(Reg::Kind::Epsilon));
  return eps;
}

RegPtr reg_or(RegPtr left, RegPtr right) {
  auto r = std::make_shared<Reg>(Reg::Kind::Or);
  r->left = std::move(left);
  r->right = std::move(right);
  return finish(r);
}

RegPtr reg_then(RegPtr left, RegPtr right) {
  auto r = std::make_shared<Reg>(Reg::Kind::Then);
  r->left = std::move(left);
  r->right = std::move(right);
  return finish(r);
}

RegPtr reg_star(RegPtr body) {
  auto r = std::make_shared<Reg>(Reg::Kind::Star);
  r->left = std::move(body);
  return finish(r);
}

bool reg_equal(const RegPtr& a, const RegPtr& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  if (a->hash != b->hash || a->kind != b->kind) return false;
  return a->name == b->name && a->select == b->select && a->text == b->text &&
         a->attributes == b->attributes && reg_equal(a->left, b->left) &&
         reg_equal(a->right, b->right);
}

RegPtr reg_chain(const std::vector<RegPtr>& items) {
  RegPtr chain = reg_epsilon();
  for (auto it = items.rbegin(); it != items.rend(); ++it)
    chain = reg_then(*it, chain);
  return chain;
}

std::vector<RegPtr> chain_items(const RegPtr& chain) {
  std::vector<RegPtr> items;
  RegPtr cur = chain;
  while (cur && cur->kind == Reg::Kind::Then) {
    items.push_back(cur->left);
    cur = cur->right;
  }
  return items;
}

namespace {

bool chain_terminated(const RegPtr& r) {
  RegPtr cur = r;
  while (cur->kind == Reg::Kind::Then) cur = cur->right;
  return cur->kind == Reg::Kind::Epsilon;
}

bool normal_rec(const RegPtr& r, bool element_content) {
  switch (r->kind) {
    case Reg::Kind::Epsilon:
    case Reg::Kind::Macro:
    case Reg::Kind::Attr:
    case Reg::Kind::TextSlot:
    case Reg::Kind::Include:
    case Reg::Kind::Literal:
      return true;
    case Reg::Kind::Element:
      return normal_rec(r->left, true);
    case Reg::Kind::Star:
      return normal_rec(r->left, false);
    case Reg::Kind::Or:
      if (r->left->kind == Reg::Kind::Or) return false;
      return normal_rec(r->left, false) && normal_rec(r->right, false);
    case Reg::Kind::Then: {
      if (!chain_terminated(r)) return false;
      auto items = chain_items(r);
      bool past_attr_prefix = false;
      for (size_t i = 0; i < items.size(); ++i) {
        const RegPtr& item = items[i];
        if (item->kind == Reg::Kind::Then || item->kind == Reg::Kind::Epsilon)
          return false;  // not right-associative / empty left child
        if (i > 0 && item->kind == Reg::Kind::Literal &&
            items[i - 1]->kind == Reg::Kind::Literal)
          return false;  // adjacent text literals
        if (item->kind == Reg::Kind::Attr) {
          if (!element_content || past_attr_prefix) return false;
        } else {
          past_attr_prefix = true;
        }
        if (!normal_rec(item, false)) return false;
      }
      return true;
    }
  }
  return false;
}

}  // namespace

bool is_normal(const RegPtr& r) { return normal_rec(r, true); }

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

void debug_into(const RegPtr& r, std::string& out, bool parens) {
  bool atomic = r->kind == Reg::Kind::Epsilon;
  bool wrap = parens && !atomic;
  if (wrap) out.push_back('(');
  switch (r->kind) {
    case Reg::Kind::Macro:
      out += "MacroR ";
      quote_into(r->name, out);
      break;
    case Reg::Kind::Attr:
      out += "AttrR ";
      quote_into(r->name, out);
      out.push_back(' ');
      quote_into(r->select, out);
      break;
    case Reg::Kind::TextSlot:
      out += "TextR ";
      quote_into(r->select, out);
      break;
    case Reg::Kind::Include:
      out += "IncludeR ";
      quote_into(r->select, out);
      break;
    case Reg::Kind::Element:
      out += "ElR ";
      quote_into(r->name, out);
      out.push_back(' ');
      attrs_into(r->attributes, out);
      out.push_back(' ');
      debug_into(r->left, out, true);
      break;
    case Reg::Kind::Literal:
      out += "TxtR ";
      quote_into(r->text, out);
      break;
    case Reg::Kind::Epsilon:
      out += "Epsilon";
      break;
    case Reg::Kind::Or:
      out += "Or ";
      debug_into(r->left, out, true);
      out.push_back(' ');
      debug_into(r->right, out, true);
      break;
    case Reg::Kind::Then:
      out += "Then ";
      debug_into(r->left, out, true);
      out.push_back(' ');
      debug_into(r->right, out, true);
      break;
    case Reg::Kind::Star:
      out += "Star ";
      debug_into(r->left, out, true);
      break;
  }
  if (wrap) out.push_back(')');
}

class DebugParser {
public:
  explicit DebugParser(const std::string& in) : in_(in) {}

  RegPtr run() {
    RegPtr r = parse_term();
    skip_ws();
    if (pos_ != in_.size()) fail("trailing input");
    return r;
  }

private:
  const std::string& in_;
  size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) {
    throw InvalidInputError("reg notation error at offset " + std::to_string(pos_) +
                            ": " + msg);
  }

  void skip_ws() {
    while (pos_ < in_.size() && std::isspace(static_cast<unsigned char>(in_[pos_]))) ++pos_;
  }

  bool try_char(char c) {
    skip_ws();
    if (pos_ < in_.size() && in_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect_char(char c) {
    if (!try_char(c)) fail(std::string("expected '") + c + "'");
  }

  std::string parse_word() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < in_.size() && std::isalpha(static_cast<unsigned char>(in_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a constructor name");
    return in_.substr(start, pos_ - start);
  }

  std::string parse_string() {
    expect_char('"');
    std::string s;
    while (true) {
      if (pos_ >= in_.size()) fail("unterminated string");
      char c = in_[pos_++];
      if (c == '"') return s;
      if (c == '\\') {
        if (pos_ >= in_.size()) fail("dangling escape");
        s.push_back(in_[pos_++]);
      } else {
        s.push_back(c);
      }
    }
  }

  std::vector<Attribute> parse_attrs() {
    expect_char('[');
    std::vector<Attribute> attrs;
    if (try_char(']')) return attrs;
    while (true) {
      expect_char('(');
      std::string k = parse_string();
      expect_char(',');
      std::string v = parse_string();
      expect_char(')');
      attrs.emplace_back(std::move(k), std::move(v));
      if (try_char(']')) return attrs;
      expect_char(',');
    }
  }

  RegPtr parse_operand() {
    skip_ws();
    if (try_char('(')) {
      RegPtr r = parse_term();
      expect_char(')');
      return r;
    }
    // A bare operand must be atomic, i.e. Epsilon.
    std::string word = parse_word();
    if (word == "Epsilon") return reg_epsilon();
    fail("operand '" + word + "' must be parenthesized");
  }

  RegPtr parse_term() {
    skip_ws();
    if (pos_ < in_.size() && in_[pos_] == '(') {
      ++pos_;
      RegPtr r = parse_term();
      expect_char(')');
      return r;
    }
    std::string word = parse_word();
    if (word == "Epsilon") return reg_epsilon();
    if (word == "MacroR") return reg_macro(parse_string());
    if (word == "TextR") return reg_text_slot(parse_string());
    if (word == "IncludeR") return reg_include(parse_string());
    if (word == "TxtR") return reg_literal(parse_string());
    if (word == "AttrR") {
      std::string n = parse_string();
      return reg_attr(n, parse_string());
    }
    if (word == "ElR") {
      std::string n = parse_string();
      auto attrs = parse_attrs();
      return reg_element(n, std::move(attrs), parse_operand());
    }
    if (word == "Or") {
      RegPtr l = parse_operand();
      return reg_or(l, parse_operand());
    }
    if (word == "Then") {
      RegPtr l = parse_operand();
      return reg_then(l, parse_operand());
    }
    if (word == "Star") return reg_star(parse_operand());
    fail("unknown constructor '" + word + "'");
  }
};

}  // namespace

std::string to_debug_string(const RegPtr& r) {
  std::string out;
  debug_into(r, out, false);
  return out;
}

RegPtr parse_reg_debug(const std::string& input) { return DebugParser(input).run(); }

}  // namespace xtl
