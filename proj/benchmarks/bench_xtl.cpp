#include <benchmark/benchmark.h>

#include <string>

#include "xtl/derivatives.hpp"
#include "xtl/instantiate.hpp"
#include "xtl/query.hpp"
#include "xtl/validate.hpp"
#include "xtl/xml.hpp"

namespace {

std::string wide_document(int rows) {
  std::string s = "<table>";
  for (int i = 0; i < rows; ++i)
    s += "<tr><td>cell " + std::to_string(i) + "</td><td k=\"" + std::to_string(i) +
         "\">more</td></tr>";
  s += "</table>";
  return s;
}

void BM_ParseSerialize(benchmark::State& state) {
  std::string input = wide_document(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    xtl::DocNode d = xtl::parse_document(input);
    benchmark::DoNotOptimize(xtl::serialize_document(d));
  }
}
BENCHMARK(BM_ParseSerialize)->Arg(16)->Arg(128);

void BM_Instantiate(benchmark::State& state) {
  std::string data = wide_document(static_cast<int>(state.range(0)));
  xtl::DocQueryPlugin plugin(xtl::parse_document(data));
  xtl::XtlNode tmpl = xtl::doc_to_xtl(xtl::parse_document(
      "<out><xtl:for-each select=\"//tr\"><item><xtl:text select=\"td\"/></item>"
      "</xtl:for-each></out>"));
  for (auto _ : state)
    benchmark::DoNotOptimize(
        xtl::instantiate_start(tmpl, plugin.root_context(), plugin));
}
BENCHMARK(BM_Instantiate)->Arg(16)->Arg(64);

void BM_Validate(benchmark::State& state) {
  xtl::DocNode schema = xtl::parse_document(
      "<table><xtl:for-each select=\"//row\"><tr><td><xtl:text select=\".\"/></td>"
      "<td><xtl:text select=\".\"/></td></tr></xtl:for-each></table>");
  xtl::DocNode instance = xtl::parse_document(wide_document(static_cast<int>(state.range(0))));
  xtl::ValidateOptions opts;
  opts.memo = state.range(1) != 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(xtl::validate_document(instance, schema, opts));
}
BENCHMARK(BM_Validate)->Args({8, 0})->Args({8, 1})->Args({16, 0})->Args({16, 1});

void BM_BuildNfa(benchmark::State& state) {
  xtl::SRegexPtr r = xtl::parse_sregex("x*(xx+y)*(x+y)*(xy+yx)*");
  for (auto _ : state) benchmark::DoNotOptimize(xtl::build_nfa(r));
}
BENCHMARK(BM_BuildNfa);

}  // namespace

BENCHMARK_MAIN();
