#ifndef XTL_DERIVATIVES_HPP
#define XTL_DERIVATIVES_HPP

#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "xtl/errors.hpp"

namespace xtl {

struct SRegex;
using SRegexPtr = std::shared_ptr<const SRegex>;

// String-level regular expressions: empty language, empty word, single
// symbols, concatenation, alternation and repetition.
struct SRegex {
  enum class Kind { Empty, Lambda, Symbol, Concat, Alt, Star };

  Kind kind;
  char symbol = 0;   // Symbol
  SRegexPtr left;    // Concat/Alt left, Star body
  SRegexPtr right;   // Concat/Alt right

  explicit SRegex(Kind k) : kind(k) {}
};

SRegexPtr sre_empty();
SRegexPtr sre_lambda();
SRegexPtr sre_symbol(char c);
SRegexPtr sre_concat(SRegexPtr l, SRegexPtr r);
SRegexPtr sre_alt(SRegexPtr l, SRegexPtr r);
SRegexPtr sre_star(SRegexPtr body);

// Textual syntax: single letters, juxtaposition, '+' alternation, postfix
// '*', parentheses. Throws InvalidInputError on syntax errors.
SRegexPtr parse_sregex(const std::string& input);

// Minimal-parentheses rendering of the canonical form.
std::string to_string(const SRegexPtr& r);

// Canonical syntactic form used for state identity: Concat and Alt
// right-associated, Lambda factors dropped from concatenations.
SRegexPtr canonical(const SRegexPtr& r);

bool sre_equal(const SRegexPtr& a, const SRegexPtr& b);

// True iff the language of r contains the empty word.
bool nullable(const SRegexPtr& r);

// Antimirov linear form: the set of (symbol, residual) pairs of r. Residuals
// are canonical; the set is ordered by (symbol, rendered residual).
std::vector<std::pair<char, SRegexPtr>> linear_form(const SRegexPtr& r);

struct Nfa {
  std::vector<SRegexPtr> states;  // canonical forms; states[initial] is the start
  size_t initial = 0;
  std::vector<bool> final_states;           // final_states[i]: states[i] accepts
  std::set<std::tuple<size_t, char, size_t>> transitions;
  std::set<char> alphabet;

  size_t state_index(const SRegexPtr& s) const;
};

// Iterates the partial-derivatives construction <PD, Delta, tau> from
// <{}, {r}, {}> until no new states appear. States are compared by
// canonical syntactic form; final states are the nullable ones.
Nfa build_nfa(const SRegexPtr& r);

// Subset simulation. Throws InvalidInputError for symbols outside the
// automaton's alphabet.
bool nfa_accepts(const Nfa& nfa, const std::string& word);

// Deterministic plain-text transition table, one "state --sym--> state"
// line, sorted; final states are marked in a trailing listing.
std::string transition_table(const Nfa& nfa);

// Graphviz rendering.
std::string to_dot(const Nfa& nfa);

}  // namespace xtl

#endif  // XTL_DERIVATIVES_HPP
