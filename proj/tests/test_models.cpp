#include <doctest.h>

#include "oracle.hpp"
#include "test_support.hpp"
#include "xtl/mapping.hpp"
#include "xtl/xml.hpp"

using namespace xtl;

TEST_CASE("doc_to_xtl: plain elements and the command tags") {
  CHECK(doc_to_xtl(parse_document("<a id=\"1\"><b/></a>")) ==
        XtlNode::element("a", {{"id", "1"}}, {XtlNode::element("b")}));

  CHECK(doc_to_xtl(parse_document("<xtl:text select=\"@title\"/>")) ==
        XtlNode::text_slot("@title"));

  CHECK(doc_to_xtl(parse_document("<xtl:macro name=\"M\"><a/></xtl:macro>")) ==
        XtlNode::macro("M", {XtlNode::element("a")}));

  CHECK(doc_to_xtl(parse_document("<xtl:include select=\"//url\"/>")) ==
        XtlNode::include("//url"));

  CHECK(doc_to_xtl(parse_document("<xtl:call-macro name=\"M\"/>")) ==
        XtlNode::call_macro("M"));

  CHECK(doc_to_xtl(parse_document("<xtl:if select=\"//b\"><c/></xtl:if>")) ==
        XtlNode::if_node("//b", {XtlNode::element("c")}));

  CHECK(doc_to_xtl(parse_document("<xtl:attribute name=\"id\" select=\"999\"/>")) ==
        XtlNode::attribute("id", "999"));
}

TEST_CASE("doc_to_xtl: unknown xtl-prefixed tags are ordinary elements") {
  XtlNode n = doc_to_xtl(parse_document("<xtl:frobnicate a=\"1\"/>"));
  CHECK(n.kind == XtlNode::Kind::Element);
  CHECK(n.name == "xtl:frobnicate");
}

TEST_CASE("doc_to_xtl: missing required attributes") {
  CHECK_THROWS_AS(doc_to_xtl(parse_document("<xtl:text/>")), MappingError);
  CHECK_THROWS_AS(doc_to_xtl(parse_document("<a><xtl:attribute name=\"x\"/></a>")), MappingError);
  CHECK_THROWS_AS(doc_to_xtl(parse_document("<xtl:macro name=\"m\"><xtl:macro name=\"n\"/></xtl:macro>")),
                  MappingError);
}

TEST_CASE("xtl_to_doc: inverse forms") {
  CHECK(xtl_to_doc(XtlNode::text_node("hi")) == DocNode::text_node("hi"));
  CHECK(serialize_document(xtl_to_doc(XtlNode::attribute("id", "999"))) ==
        "<xtl:attribute name=\"id\" select=\"999\"/>");
}

TEST_CASE("property: doc_to_xtl(xtl_to_doc(x)) == x on random templates") {
  xtltest::Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    XtlNode t = xtltest::random_template(rng);
    CHECK(doc_to_xtl(xtl_to_doc(t)) == t);
  }
}

TEST_CASE("property: parsed template fixtures round-trip through both models") {
  const char* fixtures[] = {
      "<books><xtl:for-each select=\"//book\"><title><xtl:text select=\"@title\"/>"
      "</title></xtl:for-each></books>",
      "<book id=\"1\"><xtl:attribute name=\"author\" select=\"//book/@author\"/>"
      "<xtl:attribute name=\"id\" select=\"999\"/></book>",
      "<a><xtl:macro name=\"m\"><b/></xtl:macro><xtl:call-macro name=\"m\"/></a>",
  };
  for (const char* s : fixtures) {
    DocNode d = parse_document(s);
    CHECK(xtl_to_doc(doc_to_xtl(d)) == d);
  }
}

TEST_CASE("extract_macros: environment keeps document order") {
  std::vector<XtlNode> hedge = {
      XtlNode::macro("x", {XtlNode::element("a")}),
      XtlNode::macro("y", {XtlNode::element("b"), XtlNode::element("b")}),
      XtlNode::text_node("t"),
  };
  auto [env, rest] = extract_macros(hedge);
  REQUIRE(env.entries.size() == 2);
  CHECK(env.entries[0].first == "x");
  CHECK(env.entries[1].first == "y");
  CHECK(env.entries[1].second.size() == 2);
  REQUIRE(rest.size() == 1);
  CHECK(rest[0] == XtlNode::text_node("t"));

  auto [empty_env, same] = extract_macros(rest);
  CHECK(empty_env.entries.empty());
  CHECK(same == rest);

  std::vector<XtlNode> dup = {XtlNode::macro("M", {}), XtlNode::macro("M", {})};
  CHECK_THROWS_AS(extract_macros(dup), DuplicateMacroError);
}

TEST_CASE("xtl_to_reg: the container example") {
  XtlNode x = XtlNode::element("a", {{"id", "1"}}, {XtlNode::element("b")});
  RegPtr expected = reg_element(
      "a", {{"id", "1"}}, reg_then(reg_element("b", {}, reg_epsilon()), reg_epsilon()));
  CHECK(reg_equal(xtl_to_reg(x), expected));
  CHECK(to_debug_string(xtl_to_reg(x)) ==
        "ElR \"a\" [(\"id\",\"1\")] (Then (ElR \"b\" [] Epsilon) Epsilon)");
}

TEST_CASE("xtl_to_reg: composed command node") {
  DocNode d = parse_document(
      "<book><title>Haskell</title>"
      "<xtl:for-each select=\"//authors\"><author><xtl:text select=\".\"/></author>"
      "</xtl:for-each></book>");
  RegPtr r = xtl_to_reg(doc_to_xtl(d));
  RegPtr expected = reg_element(
      "book", {},
      reg_then(reg_element("title", {}, reg_then(reg_literal("Haskell"), reg_epsilon())),
               reg_then(reg_star(reg_element(
                            "author", {}, reg_then(reg_text_slot("."), reg_epsilon()))),
                        reg_epsilon())));
  CHECK(reg_equal(r, expected));
}

TEST_CASE("xtl_to_reg: empty hedge maps to Epsilon, macros have no image") {
  CHECK(reg_equal(hedge_to_reg({}), reg_epsilon()));
  CHECK_THROWS_AS(xtl_to_reg(XtlNode::macro("m", {})), UnmappableNodeError);
}

TEST_CASE("normalize_reg: re-association and Epsilon elimination") {
  RegPtr a = reg_literal("a");
  RegPtr b = reg_element("b", {}, reg_epsilon());
  RegPtr c = reg_element("c", {}, reg_epsilon());

  RegPtr left_nested = reg_then(reg_then(a, b), c);
  RegPtr norm = normalize_reg(left_nested);
  CHECK(reg_equal(norm, reg_chain({a, b, c})));
  CHECK(is_normal(norm));

  CHECK(reg_equal(normalize_reg(reg_then(reg_epsilon(), b)), reg_chain({b})));
}

TEST_CASE("normalize_reg: attribute items move to the content prefix") {
  RegPtr e = reg_element(
      "e", {},
      reg_then(reg_element("c", {}, reg_epsilon()),
               reg_then(reg_attr("k", "v"), reg_epsilon())));
  RegPtr n = normalize_reg(e);
  auto items = chain_items(n->left);
  REQUIRE(items.size() == 2);
  CHECK(items[0]->kind == Reg::Kind::Attr);
  CHECK(items[1]->kind == Reg::Kind::Element);
  CHECK(is_normal(n));
}

TEST_CASE("normalize_reg: alternatives re-associate to the right") {
  RegPtr a = reg_chain({reg_element("a", {}, reg_epsilon())});
  RegPtr b = reg_chain({reg_element("b", {}, reg_epsilon())});
  RegPtr c = reg_chain({reg_element("c", {}, reg_epsilon())});
  RegPtr n = normalize_reg(reg_or(reg_or(a, b), c));
  CHECK(reg_equal(n, reg_or(a, reg_or(b, c))));
  CHECK(is_normal(n));
}

TEST_CASE("normalize_reg: text literal merging rules") {
  // One empty side merges away; two non-empty neighbours are irreducible.
  RegPtr one = normalize_reg(reg_then(reg_literal(""), reg_then(reg_literal("x"), reg_epsilon())));
  CHECK(reg_equal(one, reg_chain({reg_literal("x")})));

  RegPtr bad = reg_then(reg_literal("x"), reg_then(reg_literal("y"), reg_epsilon()));
  CHECK_THROWS_AS(normalize_reg(bad), NormalizeError);
}

TEST_CASE("property: mapping emits normal form; normalize is idempotent") {
  xtltest::Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    XtlNode t = xtltest::random_template(rng);
    auto [env, rest] = extract_macros(t.children);
    XtlNode stripped = XtlNode::element(t.name, t.attributes, rest);
    RegPtr r = xtl_to_reg(stripped);
    CHECK(is_normal(r));
    CHECK(reg_equal(normalize_reg(r), r));
    for (const auto& [name, body] : env.entries) {
      RegPtr rb = body_to_reg(body);
      CHECK(reg_equal(normalize_reg(rb), rb));
    }
  }
}

TEST_CASE("property: normalize preserves the bounded language") {
  xtltest::Rng rng(12);
  xtl::RegMacroEnv no_macros;
  xtltest::EnumParams params;
  params.max_atoms = 8;
  params.star_unroll = 8;
  params.text_pool = {"a", "b"};
  int checked = 0;
  for (int i = 0; i < 120; ++i) {
    // Non-normal inputs: left-nested chains with embedded Epsilons.
    RegPtr a = reg_element("a", {}, reg_epsilon());
    RegPtr b = rng.chance(50) ? reg_literal(rng.chance(50) ? "a" : "")
                              : reg_element("b", {}, reg_epsilon());
    RegPtr c = rng.chance(50) ? reg_star(reg_then(a, reg_epsilon()))
                              : reg_or(reg_epsilon(), reg_then(b, reg_epsilon()));
    RegPtr messy = reg_then(reg_then(reg_epsilon(), rng.chance(50) ? a : c),
                            reg_then(b, rng.chance(50) ? reg_epsilon() : reg_then(c, reg_epsilon())));
    RegPtr norm;
    try {
      norm = normalize_reg(messy);
    } catch (const NormalizeError&) {
      continue;  // adjacent literals, legitimately rejected
    }
    CHECK(reg_equal(normalize_reg(norm), norm));
    auto l1 = xtltest::enumerate_language(messy, no_macros, params);
    auto l2 = xtltest::enumerate_language(norm, no_macros, params);
    CHECK(l1 == l2);
    ++checked;
  }
  CHECK(checked > 50);
}

TEST_CASE("reg debug notation round-trips") {
  const char* samples[] = {
      "Epsilon",
      "Then (ElR \"b\" [] Epsilon) Epsilon",
      "ElR \"a\" [(\"id\",\"1\")] (Then (AttrR \"title\" \"//AAA\") (Then (ElR \"b\" [] Epsilon) Epsilon))",
      "Or Epsilon (Then (TxtR \"x\") Epsilon)",
      "Star (ElR \"author\" [] (Then (TextR \".\") Epsilon))",
      "Then (MacroR \"TDs\") (Then (IncludeR \"//url\") Epsilon)",
  };
  for (const char* s : samples) {
    RegPtr r = parse_reg_debug(s);
    CHECK(to_debug_string(r) == s);
    CHECK(reg_equal(parse_reg_debug(to_debug_string(r)), r));
  }
}
