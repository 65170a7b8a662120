#ifndef XTL_TESTS_TEST_SUPPORT_HPP
#define XTL_TESTS_TEST_SUPPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "xtl/doc_node.hpp"
#include "xtl/plugin.hpp"
#include "xtl/xtl_node.hpp"

namespace xtltest {

// Deterministic RNG so failures reproduce across runs and platforms.
class Rng {
public:
  explicit Rng(uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

  uint64_t next() {
    state_ ^= state_ << 13;
    state_ ^= state_ >> 7;
    state_ ^= state_ << 17;
    return state_;
  }

  // Uniform in [0, n).
  size_t below(size_t n) { return n ? next() % n : 0; }

  bool chance(int percent) { return static_cast<int>(below(100)) < percent; }

  template <typename T>
  const T& pick(const std::vector<T>& v) {
    return v[below(v.size())];
  }

private:
  uint64_t state_;
};

// Random well-formed document: element root, no whitespace-only or empty
// text, no adjacent text siblings. Survives serialize/parse unchanged.
xtl::DocNode random_document(Rng& rng, int max_depth = 3);

// Random template term with command tags; depth bounds nesting of commands.
// Text literals never sit directly inside for-each or macro bodies, mirroring
// how the paper's fixtures use loops over elements.
xtl::XtlNode random_template(Rng& rng, int depth = 4);

// Deterministic plugin with no document behind it: results are pure hash
// functions of (select, context). Context payload is a uint64_t seed; slot
// text is always non-empty.
class MockPlugin : public xtl::Plugin {
public:
  explicit MockPlugin(uint64_t salt = 0) : salt_(salt) {}

  xtl::Context root_context() const;

  std::string eval_text(const std::string& select, const xtl::Context& ctx) const override;
  std::vector<xtl::Context> eval_nodes(const std::string& select,
                                       const xtl::Context& ctx) const override;
  bool eval_bool(const std::string& select, const xtl::Context& ctx) const override;
  std::optional<xtl::DocNode> eval_include(const std::string& select,
                                           const xtl::Context& ctx) const override;

private:
  uint64_t mix(const std::string& select, const xtl::Context& ctx) const;
  uint64_t salt_;
};

}  // namespace xtltest

#endif  // XTL_TESTS_TEST_SUPPORT_HPP
