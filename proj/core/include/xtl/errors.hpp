#ifndef XTL_ERRORS_HPP
#define XTL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace xtl {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed XML input. Positions are 1-based.
class ParseError : public Error {
public:
  int line;
  int column;
  ParseError(int line_, int column_, const std::string& msg)
      : Error("parse error at " + std::to_string(line_) + ":" +
              std::to_string(column_) + ": " + msg),
        line(line_), column(column_) {}
};

// A recognized command tag is structurally unusable (missing attribute,
// nested macro definition, ...). `path` is a /-joined child index path.
class MappingError : public Error {
public:
  std::string path;
  MappingError(const std::string& path_, const std::string& msg)
      : Error("mapping error at " + (path_.empty() ? std::string("/") : path_) +
              ": " + msg),
        path(path_) {}
};

class DuplicateMacroError : public Error {
public:
  std::string name;
  explicit DuplicateMacroError(const std::string& name_)
      : Error("DuplicateMacro: macro '" + name_ + "' defined twice"), name(name_) {}
};

class UnboundMacroError : public Error {
public:
  std::string name;
  explicit UnboundMacroError(const std::string& name_)
      : Error("UnboundMacro: no macro named '" + name_ + "'"), name(name_) {}
};

class RecursionLimitError : public Error {
public:
  int depth;
  explicit RecursionLimitError(int depth_)
      : Error("RecursionLimitExceeded: macro expansion deeper than " +
              std::to_string(depth_)),
        depth(depth_) {}
};

// Select expression that the query plugin cannot parse.
class QuerySyntaxError : public Error {
public:
  explicit QuerySyntaxError(const std::string& msg)
      : Error("QuerySyntaxError: " + msg) {}
};

// A placeholder plugin call failed; carries the template path it happened at.
class PluginError : public Error {
public:
  std::string path;
  PluginError(const std::string& path_, const std::string& msg)
      : Error("plugin error at template path " +
              (path_.empty() ? std::string("/") : path_) + ": " + msg),
        path(path_) {}
};

// Regular-expression term cannot be brought into normal form
// (two adjacent non-empty text literals).
class NormalizeError : public Error {
public:
  explicit NormalizeError(const std::string& msg)
      : Error("NormalizeError: " + msg) {}
};

// Macro definitions cannot be mapped to a hedge expression.
class UnmappableNodeError : public Error {
public:
  explicit UnmappableNodeError(const std::string& msg)
      : Error("UnmappableNode: " + msg) {}
};

// Violated operation precondition (instance with command tags, wrong root
// kind, non-element argument, unknown word symbol, ...).
class InvalidInputError : public Error {
public:
  explicit InvalidInputError(const std::string& msg) : Error(msg) {}
};

}  // namespace xtl

#endif  // XTL_ERRORS_HPP
