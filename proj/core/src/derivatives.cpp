#include "xtl/derivatives.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace xtl {

SRegexPtr sre_empty() {
  static const SRegexPtr e = std::make_shared<SRegex>(SRegex::Kind::Empty);
  return e;
}

SRegexPtr sre_lambda() {
  static const SRegexPtr l = std::make_shared<SRegex>(SRegex::Kind::Lambda);
  return l;
}

SRegexPtr sre_symbol(char c) {
  auto r = std::make_shared<SRegex>(SRegex::Kind::Symbol);
  r->symbol = c;
  return r;
}

SRegexPtr sre_concat(SRegexPtr l, SRegexPtr r) {
  auto n = std::make_shared<SRegex>(SRegex::Kind::Concat);
  n->left = std::move(l);
  n->right = std::move(r);
  return n;
}

SRegexPtr sre_alt(SRegexPtr l, SRegexPtr r) {
  auto n = std::make_shared<SRegex>(SRegex::Kind::Alt);
  n->left = std::move(l);
  n->right = std::move(r);
  return n;
}

SRegexPtr sre_star(SRegexPtr body) {
  auto n = std::make_shared<SRegex>(SRegex::Kind::Star);
  n->left = std::move(body);
  return n;
}

namespace {

class RegexParser {
public:
  explicit RegexParser(const std::string& in) : in_(in) {}

  SRegexPtr run() {
    SRegexPtr r = parse_alt();
    if (pos_ != in_.size()) fail("unexpected character");
    return r;
  }

private:
  const std::string& in_;
  size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) {
    throw InvalidInputError("regex syntax error at offset " + std::to_string(pos_) +
                            ": " + msg);
  }

  bool eof() const { return pos_ >= in_.size(); }
  char peek() const { return in_[pos_]; }

  SRegexPtr parse_alt() {
    SRegexPtr l = parse_concat();
    while (!eof() && peek() == '+') {
      ++pos_;
      l = sre_alt(l, parse_concat());
    }
    return l;
  }

  SRegexPtr parse_concat() {
    SRegexPtr l = parse_postfix();
    while (!eof() && (peek() == '(' || std::isalpha(static_cast<unsigned char>(peek()))))
      l = sre_concat(l, parse_postfix());
    return l;
  }

  SRegexPtr parse_postfix() {
    SRegexPtr r = parse_atom();
    while (!eof() && peek() == '*') {
      ++pos_;
      r = sre_star(r);
    }
    return r;
  }

  SRegexPtr parse_atom() {
    if (eof()) fail("unexpected end of input");
    char c = peek();
    if (c == '(') {
      ++pos_;
      SRegexPtr r = parse_alt();
      if (eof() || peek() != ')') fail("missing ')'");
      ++pos_;
      return r;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      ++pos_;
      return sre_symbol(c);
    }
    fail(std::string("unexpected '") + c + "'");
  }
};

int precedence(SRegex::Kind k) {
  switch (k) {
    case SRegex::Kind::Alt: return 0;
    case SRegex::Kind::Concat: return 1;
    case SRegex::Kind::Star: return 2;
    default: return 3;
  }
}

void print_into(const SRegexPtr& r, std::string& out, int min_prec) {
  bool wrap = precedence(r->kind) < min_prec;
  if (wrap) out.push_back('(');
  switch (r->kind) {
    case SRegex::Kind::Empty:
      out += "{}";
      break;
    case SRegex::Kind::Lambda:
      out += "()";
      break;
    case SRegex::Kind::Symbol:
      out.push_back(r->symbol);
      break;
    case SRegex::Kind::Concat:
      print_into(r->left, out, 2);
      print_into(r->right, out, 1);
      break;
    case SRegex::Kind::Alt:
      print_into(r->left, out, 1);
      out.push_back('+');
      print_into(r->right, out, 0);
      break;
    case SRegex::Kind::Star:
      print_into(r->left, out, 2);
      out.push_back('*');
      break;
  }
  if (wrap) out.push_back(')');
}

void flatten_concat(const SRegexPtr& r, std::vector<SRegexPtr>& factors) {
  if (r->kind == SRegex::Kind::Concat) {
    flatten_concat(r->left, factors);
    flatten_concat(r->right, factors);
  } else if (r->kind != SRegex::Kind::Lambda) {
    factors.push_back(r);
  }
}

void flatten_alt(const SRegexPtr& r, std::vector<SRegexPtr>& branches) {
  if (r->kind == SRegex::Kind::Alt) {
    flatten_alt(r->left, branches);
    flatten_alt(r->right, branches);
  } else {
    branches.push_back(r);
  }
}

}  // namespace

SRegexPtr parse_sregex(const std::string& input) { return RegexParser(input).run(); }

std::string to_string(const SRegexPtr& r) {
  std::string out;
  print_into(r, out, 0);
  return out;
}

SRegexPtr canonical(const SRegexPtr& r) {
  switch (r->kind) {
    case SRegex::Kind::Empty:
    case SRegex::Kind::Lambda:
    case SRegex::Kind::Symbol:
      return r;
    case SRegex::Kind::Star:
      return sre_star(canonical(r->left));
    case SRegex::Kind::Alt: {
      std::vector<SRegexPtr> branches;
      flatten_alt(r, branches);
      SRegexPtr out = canonical(branches.back());
      for (auto it = std::next(branches.rbegin()); it != branches.rend(); ++it)
        out = sre_alt(canonical(*it), out);
      return out;
    }
    case SRegex::Kind::Concat: {
      std::vector<SRegexPtr> factors;
      flatten_concat(r, factors);
      if (factors.empty()) return sre_lambda();
      SRegexPtr out = canonical(factors.back());
      for (auto it = std::next(factors.rbegin()); it != factors.rend(); ++it)
        out = sre_concat(canonical(*it), out);
      return out;
    }
  }
  return r;
}

bool sre_equal(const SRegexPtr& a, const SRegexPtr& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b || a->kind != b->kind) return false;
  switch (a->kind) {
    case SRegex::Kind::Empty:
    case SRegex::Kind::Lambda:
      return true;
    case SRegex::Kind::Symbol:
      return a->symbol == b->symbol;
    case SRegex::Kind::Star:
      return sre_equal(a->left, b->left);
    default:
      return sre_equal(a->left, b->left) && sre_equal(a->right, b->right);
  }
}

bool nullable(const SRegexPtr& r) {
  switch (r->kind) {
    case SRegex::Kind::Empty:
    case SRegex::Kind::Symbol:
      return false;
    case SRegex::Kind::Lambda:
    case SRegex::Kind::Star:
      return true;
    case SRegex::Kind::Concat:
      return nullable(r->left) && nullable(r->right);
    case SRegex::Kind::Alt:
      return nullable(r->left) || nullable(r->right);
  }
  return false;
}

namespace {

// Appends to each residual the factor q: (a, p) (.) q = (a, p.q), with
// lambda factors simplified away.
void append_factor(std::vector<std::pair<char, SRegexPtr>>& lf, const SRegexPtr& q) {
  if (q->kind == SRegex::Kind::Lambda) return;
  for (auto& [sym, residual] : lf) {
    if (residual->kind == SRegex::Kind::Lambda)
      residual = q;
    else
      residual = sre_concat(residual, q);
  }
}

void dedupe(std::vector<std::pair<char, SRegexPtr>>& lf) {
  std::sort(lf.begin(), lf.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return to_string(a.second) < to_string(b.second);
  });
  lf.erase(std::unique(lf.begin(), lf.end(),
                       [](const auto& a, const auto& b) {
                         return a.first == b.first && sre_equal(a.second, b.second);
                       }),
           lf.end());
}

}  // namespace

std::vector<std::pair<char, SRegexPtr>> linear_form(const SRegexPtr& r) {
  std::vector<std::pair<char, SRegexPtr>> out;
  switch (r->kind) {
    case SRegex::Kind::Empty:
    case SRegex::Kind::Lambda:
      break;
    case SRegex::Kind::Symbol:
      out.emplace_back(r->symbol, sre_lambda());
      break;
    case SRegex::Kind::Star: {
      out = linear_form(r->left);
      append_factor(out, canonical(r));
      break;
    }
    case SRegex::Kind::Concat: {
      out = linear_form(r->left);
      append_factor(out, canonical(r->right));
      if (nullable(r->left)) {
        auto tail = linear_form(r->right);
        out.insert(out.end(), tail.begin(), tail.end());
      }
      break;
    }
    case SRegex::Kind::Alt: {
      out = linear_form(r->left);
      auto tail = linear_form(r->right);
      out.insert(out.end(), tail.begin(), tail.end());
      break;
    }
  }
  for (auto& [sym, residual] : out) residual = canonical(residual);
  dedupe(out);
  return out;
}

size_t Nfa::state_index(const SRegexPtr& s) const {
  for (size_t i = 0; i < states.size(); ++i)
    if (sre_equal(states[i], s)) return i;
  throw InvalidInputError("state not in automaton: " + to_string(s));
}

Nfa build_nfa(const SRegexPtr& r) {
  Nfa nfa;
  SRegexPtr start = canonical(r);
  nfa.states.push_back(start);
  nfa.initial = 0;

  std::vector<size_t> frontier{0};  // Delta
  while (!frontier.empty()) {
    std::vector<size_t> next;
    for (size_t idx : frontier) {
      for (const auto& [sym, residual] : linear_form(nfa.states[idx])) {
        nfa.alphabet.insert(sym);
        size_t target = nfa.states.size();
        for (size_t j = 0; j < nfa.states.size(); ++j) {
          if (sre_equal(nfa.states[j], residual)) {
            target = j;
            break;
          }
        }
        if (target == nfa.states.size()) {
          nfa.states.push_back(residual);
          next.push_back(target);
        }
        nfa.transitions.insert({idx, sym, target});
      }
    }
    frontier = std::move(next);
  }

  nfa.final_states.resize(nfa.states.size());
  for (size_t i = 0; i < nfa.states.size(); ++i)
    nfa.final_states[i] = nullable(nfa.states[i]);
  return nfa;
}

bool nfa_accepts(const Nfa& nfa, const std::string& word) {
  for (char c : word)
    if (!nfa.alphabet.count(c))
      throw InvalidInputError(std::string("UnknownSymbol: '") + c +
                              "' is not in the automaton's alphabet");
  std::set<size_t> current{nfa.initial};
  for (char c : word) {
    std::set<size_t> next;
    for (const auto& [from, sym, to] : nfa.transitions)
      if (sym == c && current.count(from)) next.insert(to);
    current = std::move(next);
    if (current.empty()) return false;
  }
  for (size_t s : current)
    if (nfa.final_states[s]) return true;
  return false;
}

std::string transition_table(const Nfa& nfa) {
  std::vector<std::string> lines;
  for (const auto& [from, sym, to] : nfa.transitions)
    lines.push_back(to_string(nfa.states[from]) + " --" + sym + "--> " +
                    to_string(nfa.states[to]));
  std::sort(lines.begin(), lines.end());
  std::string out;
  out += "initial: " + to_string(nfa.states[nfa.initial]) + "\n";
  for (const std::string& l : lines) out += l + "\n";
  out += "final:";
  std::vector<std::string> finals;
  for (size_t i = 0; i < nfa.states.size(); ++i)
    if (nfa.final_states[i]) finals.push_back(to_string(nfa.states[i]));
  std::sort(finals.begin(), finals.end());
  for (const std::string& f : finals) out += " " + f;
  out += "\n";
  return out;
}

std::string to_dot(const Nfa& nfa) {
  auto quote = [](const std::string& s) {
    std::string q;
    for (char c : s) {
      if (c == '"' || c == '\\') q.push_back('\\');
      q.push_back(c);
    }
    return q;
  };
  std::string out = "digraph nfa {\n  rankdir=LR;\n  start [shape=point];\n";
  for (size_t i = 0; i < nfa.states.size(); ++i) {
    out += "  q" + std::to_string(i) + " [label=\"" + quote(to_string(nfa.states[i])) +
           "\" shape=" + (nfa.final_states[i] ? "doublecircle" : "circle") + "];\n";
  }
  out += "  start -> q" + std::to_string(nfa.initial) + ";\n";
  std::vector<std::string> lines;
  for (const auto& [from, sym, to] : nfa.transitions)
    lines.push_back("  q" + std::to_string(from) + " -> q" + std::to_string(to) +
                    " [label=\"" + sym + "\"];\n");
  std::sort(lines.begin(), lines.end());
  for (const std::string& l : lines) out += l;
  out += "}\n";
  return out;
}

}  // namespace xtl
