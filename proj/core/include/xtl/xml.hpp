#ifndef XTL_XML_HPP
#define XTL_XML_HPP

#include <string>

#include "xtl/doc_node.hpp"
#include "xtl/errors.hpp"

namespace xtl {

// Parses a UTF-8 document of the supported XML subset: elements, attributes
// (double-quoted), text, self-closing tags and the five standard entities.
// Comments, processing instructions, CDATA and DOCTYPE are rejected.
// Whitespace-only text nodes are dropped; adjacent raw character runs
// collapse into a single text node. Throws ParseError on malformed input.
DocNode parse_document(const std::string& input);

// Inverse of parse_document on valid trees: parse(serialize(d)) == d.
// Childless elements are emitted self-closing, the five XML special
// characters are escaped in text and attribute values. No indentation is
// ever added.
std::string serialize_document(const DocNode& doc);

// Sorts every element's attributes ascending by name (lexicographic byte
// order), recursively. Idempotent; child order is untouched.
DocNode canonicalize(const DocNode& doc);

}  // namespace xtl

#endif  // XTL_XML_HPP
