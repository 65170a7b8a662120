#include "xtl/query.hpp"

#include <algorithm>
#include <cctype>

namespace xtl {

namespace {

// Context payload: a node of the plugin's document plus its 1-based position
// within the match list that produced it.
struct QueryContext {
  std::shared_ptr<const DocNode> doc;  // keeps the tree alive
  const DocNode* node = nullptr;
  int position = 1;
  std::optional<std::string> attr;  // set for @attr results
};

const QueryContext& payload(const Context& ctx) {
  const QueryContext* qc = std::any_cast<QueryContext>(&ctx);
  if (!qc)
    throw InvalidInputError("context was not created by the document query plugin");
  return *qc;
}

bool all_digits(const std::string& s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

class SelectParser {
public:
  explicit SelectParser(const std::string& in) : in_(in) {}

  PathExpr run() {
    skip_ws();
    PathExpr e = parse();
    skip_ws();
    if (pos_ != in_.size()) fail("trailing input");
    return e;
  }

private:
  const std::string& in_;
  size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) {
    throw QuerySyntaxError("cannot parse '" + in_ + "': " + msg);
  }

  void skip_ws() {
    while (pos_ < in_.size() && std::isspace(static_cast<unsigned char>(in_[pos_]))) ++pos_;
  }
  bool eof() const { return pos_ >= in_.size(); }
  bool match(const std::string& word) {
    if (in_.compare(pos_, word.size(), word) == 0) {
      pos_ += word.size();
      return true;
    }
    return false;
  }

  int parse_int() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < in_.size() && std::isdigit(static_cast<unsigned char>(in_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return std::stoi(in_.substr(start, pos_ - start));
  }

  std::string parse_name() {
    size_t start = pos_;
    while (pos_ < in_.size()) {
      char c = in_[pos_];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' ||
          c == '.' || c == ':') {
        // '.' only continues a name that has started with a letter
        if (c == '.' && start == pos_) break;
        ++pos_;
      } else {
        break;
      }
    }
    if (start == pos_) fail("expected a name");
    std::string name = in_.substr(start, pos_ - start);
    if (name.find("::") != std::string::npos) fail("axes are not supported");
    return name;
  }

  PathExpr::PositionPred parse_position_tail() {
    // after 'position()'
    PathExpr::PositionPred p;
    skip_ws();
    if (match("==")) {
      p.modulo = false;
      p.value = parse_int();
      if (p.value < 1) fail("position()==K requires K >= 1");
      return p;
    }
    skip_ws();
    if (match("mod")) {
      p.modulo = true;
      p.divisor = parse_int();
      skip_ws();
      if (!match("=")) fail("expected '=' after the divisor");
      p.value = parse_int();
      if (p.divisor < 1) fail("modulo divisor must be >= 1");
      if (p.value < 0 || p.value >= p.divisor) fail("modulo remainder out of range");
      return p;
    }
    fail("expected '==' or 'mod' after position()");
  }

  PathExpr parse() {
    PathExpr e;
    if (match("true") && pos_ == in_.size()) {
      e.kind = PathExpr::Kind::True;
      return e;
    }
    pos_ = 0;

    if (all_digits(in_)) {
      e.kind = PathExpr::Kind::Literal;
      e.literal = in_;
      pos_ = in_.size();
      return e;
    }

    if (match("position()")) {
      e.kind = PathExpr::Kind::PositionTest;
      e.test = parse_position_tail();
      return e;
    }

    e.kind = PathExpr::Kind::Path;
    if (match("//")) {
      e.from_root = true;
    } else if (match("/")) {
      skip_ws();
      if (eof()) {
        e.root_only = true;
        return e;
      }
      fail("absolute child paths are not supported; use '//' or a relative path");
    }

    while (true) {
      if (match("@")) {
        e.attr = parse_name();
        break;
      }
      if (match(".")) {
        e.steps.push_back(".");
      } else {
        e.steps.push_back(parse_name());
      }
      // A predicate closes the element part; only @attr may follow.
      if (match("[")) {
        if (!match("position()")) fail("only position() predicates are supported");
        e.pred = parse_position_tail();
        skip_ws();
        if (!match("]")) fail("expected ']'");
        if (match("/")) {
          if (!match("@")) fail("only an attribute step may follow a predicate");
          e.attr = parse_name();
        }
        break;
      }
      if (!match("/")) break;
    }
    return e;
  }
};

void preorder_elements(const DocNode& node, const std::string& name,
                       std::vector<const DocNode*>& out) {
  if (!node.is_element()) return;
  if (node.name.full() == name) out.push_back(&node);
  for (const DocNode& c : node.children) preorder_elements(c, name, out);
}

void collect_text(const DocNode& node, std::string& out) {
  if (node.is_text()) {
    out += node.text;
    return;
  }
  for (const DocNode& c : node.children) collect_text(c, out);
}

bool position_holds(const PathExpr::PositionPred& p, int position) {
  if (p.modulo) return position % p.divisor == p.value;
  return position == p.value;
}

std::vector<Context> wrap(const std::shared_ptr<const DocNode>& doc,
                          const std::vector<const DocNode*>& nodes,
                          const std::optional<std::string>& attr) {
  std::vector<Context> out;
  out.reserve(nodes.size());
  int pos = 1;
  for (const DocNode* n : nodes) {
    QueryContext qc;
    qc.doc = doc;
    qc.node = n;
    qc.position = pos++;
    qc.attr = attr;
    out.emplace_back(std::move(qc));
  }
  return out;
}

std::vector<Context> eval_parsed(const PathExpr& e, const QueryContext& qc) {
  if (e.kind != PathExpr::Kind::Path)
    throw QuerySyntaxError("expression does not select nodes");

  std::vector<const DocNode*> current;
  if (e.root_only) {
    current.push_back(qc.doc.get());
    return wrap(qc.doc, current, std::nullopt);
  }

  size_t i = 0;
  if (e.from_root) {
    if (e.steps.empty()) {
      if (!e.attr) throw QuerySyntaxError("'//' needs a step");
      current.push_back(qc.doc.get());
    } else {
      preorder_elements(*qc.doc, e.steps[0], current);
      i = 1;
    }
  } else {
    current.push_back(qc.node);
  }

  for (; i < e.steps.size(); ++i) {
    const std::string& step = e.steps[i];
    if (step == ".") continue;
    std::vector<const DocNode*> next;
    for (const DocNode* n : current)
      for (const DocNode& c : n->children)
        if (c.is_element() && c.name.full() == step) next.push_back(&c);
    current = std::move(next);
  }

  if (e.pred) {
    std::vector<const DocNode*> filtered;
    int pos = 1;
    for (const DocNode* n : current) {
      if (position_holds(*e.pred, pos)) filtered.push_back(n);
      ++pos;
    }
    current = std::move(filtered);
  }

  if (e.attr) {
    std::vector<const DocNode*> with_attr;
    for (const DocNode* n : current)
      for (const auto& [k, v] : n->attributes)
        if (k == *e.attr) {
          with_attr.push_back(n);
          break;
        }
    current = std::move(with_attr);
  }

  return wrap(qc.doc, current, e.attr);
}

}  // namespace

PathExpr parse_path(const std::string& select) { return SelectParser(select).run(); }

std::vector<Context> eval_path(const PathExpr& expr, const Context& ctx) {
  return eval_parsed(expr, payload(ctx));
}

std::string text_value(const Context& ctx) {
  const QueryContext& qc = payload(ctx);
  if (qc.attr) {
    for (const auto& [k, v] : qc.node->attributes)
      if (k == *qc.attr) return v;
    return "";
  }
  std::string out;
  collect_text(*qc.node, out);
  return out;
}

DocQueryPlugin::DocQueryPlugin(DocNode doc)
    : doc_(std::make_shared<const DocNode>(std::move(doc))) {}

Context DocQueryPlugin::root_context() const {
  QueryContext qc;
  qc.doc = doc_;
  qc.node = doc_.get();
  qc.position = 1;
  return qc;
}

std::string DocQueryPlugin::eval_text(const std::string& select, const Context& ctx) const {
  PathExpr e = parse_path(select);
  if (e.kind == PathExpr::Kind::Literal) return e.literal;  // integers map onto themselves
  if (e.kind != PathExpr::Kind::Path)
    throw QuerySyntaxError("'" + select + "' does not produce text");
  std::string out;
  for (const Context& c : eval_parsed(e, payload(ctx))) out += text_value(c);
  return out;
}

std::vector<Context> DocQueryPlugin::eval_nodes(const std::string& select,
                                                const Context& ctx) const {
  PathExpr e = parse_path(select);
  if (e.kind != PathExpr::Kind::Path)
    throw QuerySyntaxError("'" + select + "' does not select nodes");
  return eval_parsed(e, payload(ctx));
}

bool DocQueryPlugin::eval_bool(const std::string& select, const Context& ctx) const {
  PathExpr e = parse_path(select);
  switch (e.kind) {
    case PathExpr::Kind::True:
      return true;
    case PathExpr::Kind::Literal:
      return true;  // non-empty text is truthy
    case PathExpr::Kind::PositionTest:
      return position_holds(*e.test, payload(ctx).position);
    case PathExpr::Kind::Path:
      return !eval_parsed(e, payload(ctx)).empty();
  }
  return false;
}

std::optional<DocNode> DocQueryPlugin::eval_include(const std::string& select,
                                                    const Context& ctx) const {
  PathExpr e = parse_path(select);
  if (e.kind != PathExpr::Kind::Path || e.attr)
    throw QuerySyntaxError("'" + select + "' cannot produce an element node");
  auto matches = eval_parsed(e, payload(ctx));
  if (matches.empty()) return std::nullopt;
  // Only the first occurrence is kept, all others are dropped.
  return *payload(matches.front()).node;
}

}  // namespace xtl
