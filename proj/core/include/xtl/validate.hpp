#ifndef XTL_VALIDATE_HPP
#define XTL_VALIDATE_HPP

#include <string>
#include <utility>
#include <vector>

#include "xtl/doc_node.hpp"
#include "xtl/mapping.hpp"
#include "xtl/reg.hpp"

namespace xtl {

struct ValidationResult {
  bool valid = false;
  // Child index path (from the instance root) of the deepest instance element
  // that matched any schema element; only populated on failure.
  std::vector<int> last_valid_path;
};

struct ValidateOptions {
  bool memo = false;          // memoize (instance, schema) verdicts within one run
  int max_macro_depth = 512;  // guard against left-recursive macros
};

// Decides whether an XML instance matches an XTL document read as a schema.
// The schema root's attribute tags are folded into its attribute list, its
// macro definitions populate the macro environment, both trees map to
// normalized Reg terms and the matcher runs on the root pair. The instance
// must not contain xtl:* elements.
ValidationResult validate_document(const DocNode& instance, const DocNode& schema,
                                   const ValidateOptions& opts = {});

// Exhaustive backtracking match of an instance expression (built from
// Epsilon/Then/ElR/TxtR only) against a schema expression. Both sides must
// be in normal form. Split disjunctions short-circuit on the first success.
bool matches(const RegPtr& instance, const RegPtr& schema, const RegMacroEnv& env,
             const ValidateOptions& opts = {});

// All n+1 prefix/suffix partitions of a normal-form Then chain (or Epsilon),
// ascending by prefix length. Re-concatenating any pair reproduces the input.
std::vector<std::pair<RegPtr, RegPtr>> splits(const RegPtr& chain);

// As splits, without the trivial (Epsilon, chain) partition.
std::vector<std::pair<RegPtr, RegPtr>> front_splits(const RegPtr& chain);

// All len+1 prefix/suffix pairs of a string, ascending by prefix length.
std::vector<std::pair<std::string, std::string>> split_text(const std::string& s);

// As split_text, without the ("", s) pair.
std::vector<std::pair<std::string, std::string>> front_split_text(const std::string& s);

// Removes every attribute item from an element's content chain and merges it
// into the attribute list (same names replaced, list sorted ascending).
RegPtr extract_attributes(const RegPtr& element);

// Macro body lookup; throws UnboundMacroError.
RegPtr get_macro_reg(const std::string& name, const RegMacroEnv& env);

}  // namespace xtl

#endif  // XTL_VALIDATE_HPP
