#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "creogen/fstruct.hpp"
#include "creogen/generator.hpp"
#include "creogen/grammar_io.hpp"
#include "creogen/semgraph.hpp"

using namespace creogen;

namespace {

std::string data(const std::string& rel) {
  return std::string(CREOGEN_DATA_DIR) + "/" + rel;
}

const grammar::Grammar& shipped() {
  static grammar::Grammar g = gio::load_grammar_file(data("creole.grammar"));
  return g;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void BM_unify(benchmark::State& state) {
  fs::FeatureStructure a = {{"det", fs::FeatureValue::atom("def")},
                            {"harm", fs::FeatureValue::var("A")},
                            {"pluriel", fs::FeatureValue::atom("plus")}};
  fs::FeatureStructure b = {{"harm", fs::FeatureValue::atom("la")},
                            {"det", fs::FeatureValue::var("D")},
                            {"cadre", fs::FeatureValue::atom("transitif")}};
  for (auto _ : state) {
    auto u = fs::unify(a, b, {});
    benchmark::DoNotOptimize(u);
  }
}
BENCHMARK(BM_unify);

void BM_load_grammar(benchmark::State& state) {
  std::string text = slurp(data("creole.grammar"));
  for (auto _ : state) {
    auto g = gio::load_grammar(text, "bench");
    benchmark::DoNotOptimize(g);
  }
}
BENCHMARK(BM_load_grammar);

void BM_generate_clause(benchmark::State& state) {
  const auto& g = shipped();
  auto graph = sem::load_graph_file(data("fixtures/give-book.graph"));
  for (auto _ : state) {
    auto r = gen::generate(graph.value(), g);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_generate_clause);

void BM_generate_relative(benchmark::State& state) {
  const auto& g = shipped();
  auto graph = sem::load_graph_file(data("fixtures/book-given.graph"));
  for (auto _ : state) {
    auto r = gen::generate(graph.value(), g);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_generate_relative);

void BM_corpus(benchmark::State& state) {
  const auto& g = shipped();
  std::vector<sem::SemGraph> graphs;
  std::ifstream in(data("golden.tsv"));
  std::string line;
  while (std::getline(in, line)) {
    auto tab = line.find('\t');
    if (tab == std::string::npos) continue;
    auto r = sem::load_graph_file(data("fixtures/" + line.substr(0, tab) +
                                       ".graph"));
    graphs.push_back(r.take());
  }
  for (auto _ : state) {
    for (const auto& graph : graphs) {
      auto r = gen::generate(graph, g);
      benchmark::DoNotOptimize(r);
    }
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<int64_t>(graphs.size()));
}
BENCHMARK(BM_corpus);

}  // namespace

BENCHMARK_MAIN();
