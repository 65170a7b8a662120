#include "xtl/validate.hpp"

#include <algorithm>
#include <unordered_map>

namespace xtl {

std::vector<std::pair<RegPtr, RegPtr>> splits(const RegPtr& chain) {
  std::vector<RegPtr> items = chain_items(chain);
  std::vector<std::pair<RegPtr, RegPtr>> out;
  out.reserve(items.size() + 1);
  // Suffixes are shared subterms of the chain; prefixes are rebuilt.
  std::vector<RegPtr> suffixes;
  suffixes.reserve(items.size() + 1);
  RegPtr cur = chain;
  for (size_t i = 0; i < items.size(); ++i) {
    suffixes.push_back(cur);
    cur = cur->right;
  }
  if (cur->kind != Reg::Kind::Epsilon)
    throw InvalidInputError("splits expects an Epsilon-terminated chain");
  suffixes.push_back(cur);
  for (size_t k = 0; k <= items.size(); ++k) {
    std::vector<RegPtr> prefix(items.begin(), items.begin() + k);
    out.emplace_back(reg_chain(prefix), suffixes[k]);
  }
  return out;
}

std::vector<std::pair<RegPtr, RegPtr>> front_splits(const RegPtr& chain) {
  auto all = splits(chain);
  all.erase(all.begin());
  return all;
}

std::vector<std::pair<std::string, std::string>> split_text(const std::string& s) {
  std::vector<std::pair<std::string, std::string>> out;
  out.reserve(s.size() + 1);
  for (size_t k = 0; k <= s.size(); ++k)
    out.emplace_back(s.substr(0, k), s.substr(k));
  return out;
}

std::vector<std::pair<std::string, std::string>> front_split_text(const std::string& s) {
  auto all = split_text(s);
  all.erase(all.begin());
  return all;
}

namespace {

void merge_attribute(std::vector<Attribute>& attrs, const std::string& name,
                     const std::string& value) {
  for (auto& [k, v] : attrs) {
    if (k == name) {
      v = value;
      return;
    }
  }
  attrs.emplace_back(name, value);
}

std::vector<Attribute> sorted_attributes(std::vector<Attribute> attrs) {
  std::stable_sort(attrs.begin(), attrs.end(),
                   [](const Attribute& a, const Attribute& b) { return a.first < b.first; });
  return attrs;
}

// Memo keys hold shared ownership: a cached subterm must stay alive, or its
// address could be reused by a fresh node and alias the entry.
struct MemoKey {
  RegPtr inst;
  RegPtr schema;
  bool operator==(const MemoKey& o) const {
    return inst.get() == o.inst.get() && schema.get() == o.schema.get();
  }
};

struct MemoKeyHash {
  size_t operator()(const MemoKey& k) const {
    return std::hash<const void*>{}(k.inst.get()) * 31 ^
           std::hash<const void*>{}(k.schema.get());
  }
};

// The matcher dispatches on the instance kind (Epsilon / Then / TxtR / ElR)
// and within each group on the schema kind, trying rule patterns in their
// listed order: more specific patterns shadow general ones. Macro references
// and alternatives in the schema are handled uniformly for every instance
// kind (unfolding resp. trying both branches).
class Matcher {
public:
  Matcher(const RegMacroEnv& env, const ValidateOptions& opts) : env_(env), opts_(opts) {}

  // Optional side table: instance element pointer -> child index path, used
  // to report the deepest instance element that matched a schema element.
  void index_instance(const RegPtr& instance) {
    std::vector<int> path;
    index_rec(instance, path);
    track_ = true;
  }

  std::vector<int> best_path() const { return best_path_; }

  bool match(const RegPtr& inst, const RegPtr& schema) {
    if (!opts_.memo) return dispatch(inst, schema);
    MemoKey key{inst, schema};
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    bool result = dispatch(inst, schema);
    memo_.emplace(std::move(key), result);
    return result;
  }

private:
  void index_rec(const RegPtr& r, std::vector<int>& path) {
    if (r->kind == Reg::Kind::Element) {
      paths_[r.get()] = path;
      int i = 0;
      for (const RegPtr& item : chain_items(r->left)) {
        path.push_back(i++);
        index_rec(item, path);
        path.pop_back();
      }
    } else if (r->kind == Reg::Kind::Then) {
      int i = 0;
      for (const RegPtr& item : chain_items(r)) {
        path.push_back(i++);
        index_rec(item, path);
        path.pop_back();
      }
    }
  }

  void note_element_match(const RegPtr& inst) {
    if (!track_) return;
    auto it = paths_.find(inst.get());
    if (it == paths_.end()) return;
    const auto& p = it->second;
    if (!have_best_ || p.size() > best_path_.size() ||
        (p.size() == best_path_.size() && p > best_path_)) {
      best_path_ = p;
      have_best_ = true;
    }
  }

  bool dispatch(const RegPtr& inst, const RegPtr& schema) {
    switch (inst->kind) {
      case Reg::Kind::Epsilon:
        return match_epsilon(schema);
      case Reg::Kind::Then:
        return match_hedge(inst, schema);
      case Reg::Kind::Literal:
        return match_text(inst, schema);
      case Reg::Kind::Element:
        return match_element(inst, schema);
      default:
        throw InvalidInputError(
            "instance expressions may only contain Epsilon, Then, ElR and TxtR");
    }
  }

  bool unfold_macro(const RegPtr& inst, const RegPtr& schema) {
    RegPtr body = get_macro_reg(schema->name, env_);
    if (++macro_depth_ > opts_.max_macro_depth)
      throw RecursionLimitError(opts_.max_macro_depth);
    bool r = match(inst, body);
    --macro_depth_;
    return r;
  }

  bool either_branch(const RegPtr& inst, const RegPtr& schema) {
    return match(inst, schema->left) || match(inst, schema->right);
  }

  // Instance Epsilon (rules E1-E7).
  bool match_epsilon(const RegPtr& s) {
    switch (s->kind) {
      case Reg::Kind::Literal:
        return s->text.empty();  // E1 / E2
      case Reg::Kind::Epsilon:
        return true;  // E3
      case Reg::Kind::Element:
        return false;  // E4
      case Reg::Kind::Star:
        return true;  // E5
      case Reg::Kind::TextSlot:
        return true;  // E6
      case Reg::Kind::Then:  // E7: both branches must accept the empty hedge
        return match(reg_epsilon(), s->left) && match(reg_epsilon(), s->right);
      case Reg::Kind::Macro:
        return unfold_macro(reg_epsilon(), s);
      case Reg::Kind::Or:
        return either_branch(reg_epsilon(), s);
      case Reg::Kind::Include:
        return true;  // inclusion may produce no node
      case Reg::Kind::Attr:
        return false;
    }
    return false;
  }

  // Instance Then chain (rules Then1-Then9).
  bool match_hedge(const RegPtr& i, const RegPtr& s) {
    switch (s->kind) {
      case Reg::Kind::Epsilon:
        return false;  // Then1: a hedge never derives to the empty word
      case Reg::Kind::Literal:  // Then2
        return match(i->left, s) && match(i->right, reg_epsilon());
      case Reg::Kind::Element:
        if (i->left->kind == Reg::Kind::Element)  // Then3
          return match(i->left, s) && match(i->right, reg_epsilon());
        return false;  // Then4
      case Reg::Kind::Star:  // Then5: consume a non-empty prefix per repetition
        for (const auto& [s1, s2] : front_splits(i))
          if (match(s1, s->left) && match(s2, s)) return true;
        return false;
      case Reg::Kind::Then:
        if (i->right->kind == Reg::Kind::Epsilon)  // Then6: single-item chain
          return match(i->left, s);
        for (const auto& [t1, t2] : splits(i))  // Then7
          if (match(t1, s->left) && match(t2, s->right)) return true;
        return false;
      case Reg::Kind::TextSlot:  // Then8 / Then9
        return i->left->kind == Reg::Kind::Literal &&
               i->right->kind == Reg::Kind::Epsilon;
      case Reg::Kind::Macro:
        return unfold_macro(i, s);
      case Reg::Kind::Or:
        return either_branch(i, s);
      case Reg::Kind::Include:
        // One arbitrary element node or nothing.
        return match(i->left, s) && match(i->right, reg_epsilon());
      case Reg::Kind::Attr:
        return false;
    }
    return false;
  }

  // Instance text literal (rules #1-#8).
  bool match_text(const RegPtr& i, const RegPtr& s) {
    const std::string& text = i->text;
    switch (s->kind) {
      case Reg::Kind::Then:  // #1: some partition covers both branches
        for (const auto& [s1, s2] : split_text(text))
          if (match(reg_literal(s1), s->left) && match(reg_literal(s2), s->right))
            return true;
        return false;
      case Reg::Kind::Epsilon:
        return text.empty();  // #2 / #3
      case Reg::Kind::Star: {
        if (text.empty()) return true;  // #4
        for (const auto& [s1, s2] : front_split_text(text))  // #5
          if (match(reg_literal(s1), s->left) && match(reg_literal(s2), s)) return true;
        return text.empty();
      }
      case Reg::Kind::TextSlot:
        return true;  // #6: a text slot generates arbitrary output
      case Reg::Kind::Literal:
        return text == s->text;  // #7
      case Reg::Kind::Element:
        return false;  // #8
      case Reg::Kind::Macro:
        return unfold_macro(i, s);
      case Reg::Kind::Or:
        return either_branch(i, s);
      case Reg::Kind::Include:
        return text.empty();
      case Reg::Kind::Attr:
        return false;
    }
    return false;
  }

  // Instance element (rules ElR1-ElR10).
  bool match_element(const RegPtr& i, const RegPtr& s) {
    switch (s->kind) {
      case Reg::Kind::Element: {  // ElR1
        RegPtr reduced = extract_attributes(s);
        if (i->name != reduced->name) return false;
        if (sorted_attributes(i->attributes) != reduced->attributes) return false;
        bool ok = match(i->left, reduced->left);
        if (ok) note_element_match(i);
        return ok;
      }
      case Reg::Kind::Then: {
        const RegPtr& head = s->left;
        const RegPtr& rest = s->right;
        switch (head->kind) {
          case Reg::Kind::Element:  // ElR2
            return match(i, head) && match(reg_epsilon(), rest);
          case Reg::Kind::Or:  // ElR3
            return (match(i, head) && match(reg_epsilon(), rest)) ||
                   (match(reg_epsilon(), head) && match(i, rest));
          case Reg::Kind::Star:  // ElR4: the element is one repetition, or none
            return (match(i, head->left) && match(reg_epsilon(), rest)) || match(i, rest);
          case Reg::Kind::Macro:  // ElR5
            return (match(i, head) && match(reg_epsilon(), rest)) ||
                   (match(reg_epsilon(), head) && match(i, rest));
          case Reg::Kind::Include:
            return (match(i, head) && match(reg_epsilon(), rest)) || match(i, rest);
          default:
            return false;  // ElR6
        }
      }
      case Reg::Kind::Star:  // ElR7
        return match(i, s->left);
      case Reg::Kind::TextSlot:
        return false;  // ElR8
      case Reg::Kind::Epsilon:
        return false;  // ElR9
      case Reg::Kind::Literal:
        return false;  // ElR10
      case Reg::Kind::Macro:
        return unfold_macro(i, s);
      case Reg::Kind::Or:
        return either_branch(i, s);
      case Reg::Kind::Include:
        return true;  // inclusion stands for one arbitrary element
      case Reg::Kind::Attr:
        return false;
    }
    return false;
  }

  const RegMacroEnv& env_;
  const ValidateOptions& opts_;
  int macro_depth_ = 0;
  std::unordered_map<MemoKey, bool, MemoKeyHash> memo_;

  bool track_ = false;
  bool have_best_ = false;
  std::vector<int> best_path_;
  std::unordered_map<const Reg*, std::vector<int>> paths_;
};

bool contains_command_tag(const DocNode& node) {
  if (!node.is_element()) return false;
  if (node.name.prefix == "xtl") return true;
  for (const DocNode& c : node.children)
    if (contains_command_tag(c)) return true;
  return false;
}

}  // namespace

RegPtr extract_attributes(const RegPtr& element) {
  if (element->kind != Reg::Kind::Element)
    throw InvalidInputError("extract_attributes expects an element expression");
  const RegPtr& content = element->left;
  std::vector<RegPtr> items;
  if (content->kind == Reg::Kind::Then)
    items = chain_items(content);
  else if (content->kind != Reg::Kind::Epsilon)
    items.push_back(content);
  std::vector<Attribute> attrs = element->attributes;
  std::vector<RegPtr> rest;
  for (const RegPtr& item : items) {
    if (item->kind == Reg::Kind::Attr)
      merge_attribute(attrs, item->name, item->select);
    else
      rest.push_back(item);
  }
  RegPtr reduced = content;
  if (rest.size() != items.size() || content->kind == Reg::Kind::Then)
    reduced = content->kind == Reg::Kind::Then
                  ? reg_chain(rest)
                  : (rest.empty() ? reg_epsilon() : rest.front());
  return reg_element(element->name, sorted_attributes(std::move(attrs)), reduced);
}

RegPtr get_macro_reg(const std::string& name, const RegMacroEnv& env) {
  const RegPtr* body = env.find(name);
  if (!body) throw UnboundMacroError(name);
  return *body;
}

bool matches(const RegPtr& instance, const RegPtr& schema, const RegMacroEnv& env,
             const ValidateOptions& opts) {
  return Matcher(env, opts).match(instance, schema);
}

ValidationResult validate_document(const DocNode& instance, const DocNode& schema,
                                   const ValidateOptions& opts) {
  if (contains_command_tag(instance))
    throw InvalidInputError("InstanceContainsCommands: the instance must be free of xtl:* elements");
  if (!schema.is_element() || !instance.is_element())
    throw InvalidInputError("RootNotElement: schema and instance roots must be elements");

  XtlNode schema_root = doc_to_xtl(schema);

  // Attribute tags directly under the schema root merge into its attribute
  // list (values stay select expressions), then macros are collected.
  std::vector<Attribute> root_attrs = schema_root.attributes;
  std::vector<XtlNode> rest;
  for (const XtlNode& child : schema_root.children) {
    if (child.kind == XtlNode::Kind::Attribute)
      merge_attribute(root_attrs, child.name, child.select);
    else
      rest.push_back(child);
  }
  auto [env, content] = extract_macros_reg(rest);

  RegPtr schema_reg = normalize_reg(reg_element(
      schema_root.name, sorted_attributes(std::move(root_attrs)), hedge_to_reg(content)));
  RegPtr instance_reg = normalize_reg(xtl_to_reg(doc_to_xtl(instance)));

  Matcher matcher(env, opts);
  matcher.index_instance(instance_reg);
  ValidationResult result;
  result.valid = matcher.match(instance_reg, schema_reg);
  if (!result.valid) result.last_valid_path = matcher.best_path();
  return result;
}

}  // namespace xtl
