#include "xtl/instantiate.hpp"

#include <algorithm>

namespace xtl {

namespace {

void merge_attribute(std::vector<Attribute>& attrs, const std::string& name,
                     const std::string& value) {
  for (auto& [k, v] : attrs) {
    if (k == name) {
      v = value;  // the new value expression replaces the attribute
      return;
    }
  }
  attrs.emplace_back(name, value);
}

void sort_attributes(std::vector<Attribute>& attrs) {
  std::stable_sort(attrs.begin(), attrs.end(),
                   [](const Attribute& a, const Attribute& b) { return a.first < b.first; });
}

class Engine {
public:
  Engine(const Plugin& plugin, const InstantiateOptions& opts)
      : plugin_(plugin), opts_(opts) {}

  XtlNode start(const XtlNode& tmpl, const Context& ctx) {
    if (tmpl.kind != XtlNode::Kind::Element)
      throw InvalidInputError("RootNotElement: the template root must be an element node");
    return node(reduce_attributes(tmpl, ctx), ctx);
  }

  // Rule set for single nodes: text and attribute tags pass through, an
  // element collects macro definitions and instantiates the rest.
  XtlNode node(const XtlNode& n, const Context& ctx) {
    switch (n.kind) {
      case XtlNode::Kind::TextSlot:
      case XtlNode::Kind::Attribute:
        return n;
      case XtlNode::Kind::Element: {
        auto [env, rest] = extract_macros(n.children);
        std::vector<XtlNode> out;
        for (size_t i = 0; i < rest.size(); ++i) {
          path_.push_back(i);
          auto hedge = alpha(rest[i], ctx, env);
          path_.pop_back();
          std::move(hedge.begin(), hedge.end(), std::back_inserter(out));
        }
        return close_element(n.name, n.attributes, std::move(out), ctx);
      }
      default:
        throw InvalidInputError("instantiate_node covers text, attribute and element nodes only");
    }
  }

  std::vector<XtlNode> alpha(const XtlNode& n, const Context& ctx, const XtlMacroEnv& env) {
    switch (n.kind) {
      case XtlNode::Kind::If: {
        if (!eval_bool(n.select, ctx)) return {};
        return alpha_hedge(n.children, ctx, env);
      }
      case XtlNode::Kind::ForEach: {
        std::vector<XtlNode> out;
        for (const Context& item : eval_nodes(n.select, ctx)) {
          auto hedge = alpha_hedge(n.children, item, env);
          std::move(hedge.begin(), hedge.end(), std::back_inserter(out));
        }
        return out;
      }
      case XtlNode::Kind::CallMacro: {
        const auto& body = get_macro(n.name, env);
        if (++macro_depth_ > opts_.max_macro_depth)
          throw RecursionLimitError(opts_.max_macro_depth);
        auto out = alpha_hedge(body, ctx, env);
        --macro_depth_;
        return out;
      }
      case XtlNode::Kind::TextSlot:
        return {XtlNode::text_node(eval_text(n.select, ctx))};
      case XtlNode::Kind::Include: {
        auto el = eval_include(n.select, ctx);
        if (!el) return {};
        if (!el->is_element())
          throw PluginError(path_string(), "xtl:include plugin returned a non-element node");
        return {doc_to_xtl(*el)};
      }
      case XtlNode::Kind::Element: {
        std::vector<XtlNode> kids;
        for (size_t i = 0; i < n.children.size(); ++i) {
          path_.push_back(i);
          auto hedge = alpha(n.children[i], ctx, env);
          path_.pop_back();
          std::move(hedge.begin(), hedge.end(), std::back_inserter(kids));
        }
        return {close_element(n.name, n.attributes, std::move(kids), ctx)};
      }
      case XtlNode::Kind::Text:
        return {n};
      case XtlNode::Kind::Attribute:
        // Folded into the nearest enclosing element by close_element.
        return {n};
      case XtlNode::Kind::Macro:
        throw InvalidInputError(
            "misplaced macro definition: macros must sit directly under an element node");
    }
    throw InvalidInputError("corrupt XtlNode");
  }

  // Rule (E): direct attribute tags are removed from the hedge, united with
  // the existing attributes and canonised.
  XtlNode reduce_attributes(const XtlNode& el, const Context& ctx) {
    std::vector<Attribute> attrs = el.attributes;
    std::vector<XtlNode> rest;
    for (const XtlNode& child : el.children) {
      if (child.kind == XtlNode::Kind::Attribute)
        merge_attribute(attrs, child.name, eval_text(child.select, ctx));
      else
        rest.push_back(child);
    }
    sort_attributes(attrs);
    return XtlNode::element(el.name, std::move(attrs), std::move(rest));
  }

private:
  std::vector<XtlNode> alpha_hedge(const std::vector<XtlNode>& hedge, const Context& ctx,
                                   const XtlMacroEnv& env) {
    std::vector<XtlNode> out;
    for (size_t i = 0; i < hedge.size(); ++i) {
      path_.push_back(i);
      auto part = alpha(hedge[i], ctx, env);
      path_.pop_back();
      std::move(part.begin(), part.end(), std::back_inserter(out));
    }
    return out;
  }

  // Attribute tags surviving in an instantiated hedge attach to the element
  // being closed, replacing same-named entries; the list is re-sorted.
  XtlNode close_element(const std::string& name, std::vector<Attribute> attrs,
                        std::vector<XtlNode> children, const Context& ctx) {
    bool folded = false;
    std::vector<XtlNode> kept;
    kept.reserve(children.size());
    for (XtlNode& child : children) {
      if (child.kind == XtlNode::Kind::Attribute) {
        merge_attribute(attrs, child.name, eval_text(child.select, ctx));
        folded = true;
      } else {
        kept.push_back(std::move(child));
      }
    }
    if (folded) sort_attributes(attrs);
    return XtlNode::element(name, std::move(attrs), std::move(kept));
  }

  std::string path_string() const {
    std::string s;
    for (size_t i : path_) s += "/" + std::to_string(i);
    return s;
  }

  std::string eval_text(const std::string& select, const Context& ctx) {
    try {
      return plugin_.eval_text(select, ctx);
    } catch (const Error& e) {
      throw PluginError(path_string(), e.what());
    }
  }
  std::vector<Context> eval_nodes(const std::string& select, const Context& ctx) {
    try {
      return plugin_.eval_nodes(select, ctx);
    } catch (const Error& e) {
      throw PluginError(path_string(), e.what());
    }
  }
  bool eval_bool(const std::string& select, const Context& ctx) {
    try {
      return plugin_.eval_bool(select, ctx);
    } catch (const Error& e) {
      throw PluginError(path_string(), e.what());
    }
  }
  std::optional<DocNode> eval_include(const std::string& select, const Context& ctx) {
    try {
      return plugin_.eval_include(select, ctx);
    } catch (const Error& e) {
      throw PluginError(path_string(), e.what());
    }
  }

  const Plugin& plugin_;
  const InstantiateOptions& opts_;
  int macro_depth_ = 0;
  std::vector<size_t> path_;
};

}  // namespace

XtlNode instantiate_start(const XtlNode& tmpl, const Context& ctx, const Plugin& plugin,
                          const InstantiateOptions& opts) {
  return Engine(plugin, opts).start(tmpl, ctx);
}

XtlNode instantiate_node(const XtlNode& node, const Context& ctx, const Plugin& plugin,
                         const InstantiateOptions& opts) {
  return Engine(plugin, opts).node(node, ctx);
}

std::vector<XtlNode> instantiate_alpha(const XtlNode& node, const Context& ctx,
                                       const XtlMacroEnv& env, const Plugin& plugin,
                                       const InstantiateOptions& opts) {
  return Engine(plugin, opts).alpha(node, ctx, env);
}

const std::vector<XtlNode>& get_macro(const std::string& name, const XtlMacroEnv& env) {
  const auto* body = env.find(name);
  if (!body) throw UnboundMacroError(name);
  return *body;
}

}  // namespace xtl
