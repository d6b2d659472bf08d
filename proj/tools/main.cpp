#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "creogen/derivation.hpp"
#include "creogen/dot.hpp"
#include "creogen/errors.hpp"
#include "creogen/generator.hpp"
#include "creogen/grammar_io.hpp"
#include "creogen/report.hpp"
#include "creogen/semgraph.hpp"

#ifndef CREOGEN_DATA_DIR
#define CREOGEN_DATA_DIR "."
#endif

namespace {

using namespace creogen;

constexpr int kExitOk = 0;          // everything generated / validated
constexpr int kExitGeneration = 1;  // a graph or grammar was rejected
constexpr int kExitInput = 2;       // unreadable or unparsable input

// Loads and validates the grammar; diagnostics go to stderr and the exit
// code distinguishes bad content (1) from unreadable input (2).
std::optional<grammar::Grammar> load_grammar(const std::string& path,
                                             int& exit_code) {
  try {
    return gio::load_grammar_file(path);
  } catch (const ValidationError& e) {
    for (const auto& issue : e.issues())
      std::cerr << "creogen: " << path << ": " << issue << "\n";
    exit_code = kExitGeneration;
  } catch (const std::exception& e) {
    std::cerr << "creogen: " << path << ": " << e.what() << "\n";
    exit_code = kExitInput;
  }
  return std::nullopt;
}

std::optional<sem::SemGraph> load_graph(const std::string& path,
                                        const std::string& inline_json,
                                        int& exit_code) {
  try {
    Result<sem::SemGraph> r = inline_json.empty()
                                  ? sem::load_graph_file(path)
                                  : sem::parse_graph(inline_json);
    if (r.ok()) return r.take();
    std::cerr << "creogen: " << (inline_json.empty() ? path : "<inline>")
              << ": " << r.error().to_string() << "\n";
    exit_code = kExitGeneration;
  } catch (const std::exception& e) {
    std::cerr << "creogen: " << (inline_json.empty() ? path : "<inline>")
              << ": " << e.what() << "\n";
    exit_code = kExitInput;
  }
  return std::nullopt;
}

int generate_one(const grammar::Grammar& g, const sem::SemGraph& sg,
                 const std::string& output) {
  auto r = gen::generate(sg, g);
  if (!r.ok()) {
    if (output == "report") {
      auto issues = sem::validate_graph(sg, g);
      if (issues.empty()) issues.push_back(r.error());
      std::cout << report::error_json(sg.id, issues);
    } else {
      std::cerr << "creogen: " << sg.id << ": " << r.error().to_string()
                << "\n";
    }
    return kExitGeneration;
  }
  const auto& out = r.value();
  if (output == "report") {
    std::cout << report::generation_json(out);
  } else if (output == "dot") {
    for (const auto& s : out.sentences)
      std::cout << viz::tree_dot(s.tree, sg.id + ":" + s.root_concept);
  } else {
    std::cout << out.text << "\n";
  }
  return kExitOk;
}

int run_generate(const grammar::Grammar& g,
                 const std::vector<std::string>& paths,
                 const std::string& inline_json, const std::string& output,
                 bool strict) {
  int worst = kExitOk;
  if (!inline_json.empty()) {
    int code = kExitOk;
    auto sg = load_graph("", inline_json, code);
    if (!sg) return code;
    return generate_one(g, *sg, output);
  }
  for (const auto& path : paths) {
    int code = kExitOk;
    auto sg = load_graph(path, "", code);
    if (!sg) {
      worst = std::max(worst, code);
      if (strict || code == kExitInput) return worst;
      continue;
    }
    int rc = generate_one(g, *sg, output);
    worst = std::max(worst, rc);
    if (rc != kExitOk && strict) return worst;
  }
  return worst;
}

int run_check(const std::string& grammar_path) {
  try {
    std::ifstream in(grammar_path);
    if (!in) {
      std::cerr << "creogen: cannot read " << grammar_path << "\n";
      return kExitInput;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    grammar::Grammar g;
    try {
      g = gio::load_grammar(buf.str(), grammar_path);
    } catch (const ValidationError& e) {
      for (const auto& issue : e.issues())
        std::cout << issue << "\n";
      std::cerr << "creogen: " << grammar_path << ": "
                << e.issues().size() << " issue(s)\n";
      return kExitGeneration;
    }
    std::cout << "grammar " << grammar_path << ": " << g.lexicon.size()
              << " entries, " << g.trees.size() << " trees, "
              << g.frames.size() << " frames\n";
    return kExitOk;
  } catch (const std::exception& e) {
    std::cerr << "creogen: " << grammar_path << ": " << e.what() << "\n";
    return kExitInput;
  }
}

int run_demo(const grammar::Grammar& g, const std::string& fixtures_dir,
             const std::string& golden_path) {
  std::ifstream in(golden_path);
  if (!in) {
    std::cerr << "creogen: cannot read " << golden_path << "\n";
    return kExitInput;
  }
  int total = 0, matched = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos) {
      std::cerr << "creogen: " << golden_path << ": malformed line: " << line
                << "\n";
      return kExitInput;
    }
    std::string id = line.substr(0, tab);
    std::string expected = line.substr(tab + 1);
    ++total;
    int code = kExitOk;
    auto sg = load_graph(fixtures_dir + "/" + id + ".graph", "", code);
    if (!sg) {
      if (code == kExitInput) return code;
      continue;
    }
    auto r = gen::generate(*sg, g);
    if (!r.ok()) {
      std::cerr << "creogen: " << id << ": " << r.error().to_string() << "\n";
      continue;
    }
    std::cout << id << "\t" << r.value().text << "\n";
    if (r.value().text == expected) {
      ++matched;
    } else {
      std::cerr << "creogen: " << id << ": generated \"" << r.value().text
                << "\" but the corpus expects \"" << expected << "\"\n";
    }
  }
  std::cerr << "demo: " << matched << "/" << total
            << " fixtures match the corpus\n";
  return matched == total ? kExitOk : kExitGeneration;
}

int run_derivation(const grammar::Grammar& g, const sem::SemGraph& sg,
                   const std::string& output, bool check) {
  auto r = gen::generate(sg, g);
  if (!r.ok()) {
    std::cerr << "creogen: " << sg.id << ": " << r.error().to_string() << "\n";
    return kExitGeneration;
  }
  for (const auto& s : r.value().sentences) {
    if (output == "dot") {
      std::cout << viz::derivation_dot(s.derivation,
                                       sg.id + ":" + s.root_concept);
    } else {
      std::cout << "# " << s.root_concept << ": " << s.text << "\n";
      for (std::size_t i = 0; i < s.derivation.steps.size(); ++i) {
        const auto& st = s.derivation.steps[i];
        std::cout << "d" << i << ": " << deriv::to_string(st.op) << " "
                  << st.target << " @ " << tag::to_string(st.address) << " "
                  << st.argument;
        if (!st.origin.empty()) std::cout << "  (" << st.origin << ")";
        std::cout << "\n";
      }
      std::cout << "result: " << s.derivation.result << "\n";
    }
    if (check) {
      auto replayed = deriv::replay(s.derivation, g);
      if (!replayed.ok()) {
        std::cerr << "creogen: " << sg.id << ": replay failed: "
                  << replayed.error().to_string() << "\n";
        return kExitGeneration;
      }
      auto tokens = tag::linearize(replayed.value());
      if (tokens != s.tokens) {
        std::cerr << "creogen: " << sg.id
                  << ": replay produced a different token sequence\n";
        return kExitGeneration;
      }
      std::cerr << "replay of " << s.root_concept << " ok ("
                << tokens.size() << " tokens)\n";
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Creole sentence generation from conceptual graphs"};
  app.require_subcommand(1);
  app.fallthrough();  // --grammar may follow the subcommand name

  std::string grammar_path = std::string(CREOGEN_DATA_DIR) + "/creole.grammar";
  app.add_option("-g,--grammar", grammar_path, "grammar file")
      ->envname("CREOGEN_GRAMMAR");

  std::vector<std::string> graph_paths;
  std::string inline_json;
  std::string output = "text";
  bool strict = false;
  auto* cmd_generate =
      app.add_subcommand("generate", "realize conceptual graphs as text");
  cmd_generate->add_option("graphs", graph_paths, "graph files (JSON)");
  cmd_generate->add_option("--inline", inline_json, "graph JSON on the command line");
  cmd_generate->add_option("-o,--output", output, "text | report | dot")
      ->check(CLI::IsMember({"text", "report", "dot"}));
  cmd_generate->add_flag("--strict", strict, "stop at the first failure");

  auto* cmd_check =
      app.add_subcommand("check-grammar", "load and validate the grammar");

  std::string fixtures_dir = std::string(CREOGEN_DATA_DIR) + "/fixtures";
  std::string golden_path = std::string(CREOGEN_DATA_DIR) + "/golden.tsv";
  auto* cmd_demo =
      app.add_subcommand("demo", "regenerate the reference corpus");
  cmd_demo->add_option("--fixtures", fixtures_dir, "fixture directory");
  cmd_demo->add_option("--golden", golden_path, "expected sentences (TSV)");

  std::string deriv_path;
  std::string deriv_inline;
  std::string deriv_output = "text";
  bool deriv_check = false;
  auto* cmd_deriv =
      app.add_subcommand("derivation", "show the derivation of a graph");
  cmd_deriv->add_option("graph", deriv_path, "graph file (JSON)");
  cmd_deriv->add_option("--inline", deriv_inline, "graph JSON on the command line");
  cmd_deriv->add_option("-o,--output", deriv_output, "text | dot")
      ->check(CLI::IsMember({"text", "dot"}));
  cmd_deriv->add_flag("--check", deriv_check,
                      "replay the derivation and compare the tokens");

  CLI11_PARSE(app, argc, argv);

  if (cmd_check->parsed()) return run_check(grammar_path);

  int code = kExitOk;
  auto g = load_grammar(grammar_path, code);
  if (!g) return code;

  if (cmd_generate->parsed()) {
    if (graph_paths.empty() && inline_json.empty()) {
      std::cerr << "creogen: generate needs graph files or --inline\n";
      return kExitInput;
    }
    return run_generate(*g, graph_paths, inline_json, output, strict);
  }
  if (cmd_demo->parsed()) return run_demo(*g, fixtures_dir, golden_path);
  if (cmd_deriv->parsed()) {
    if (deriv_path.empty() && deriv_inline.empty()) {
      std::cerr << "creogen: derivation needs a graph file or --inline\n";
      return kExitInput;
    }
    auto sg = load_graph(deriv_path, deriv_inline, code);
    if (!sg) return code;
    return run_derivation(*g, *sg, deriv_output, deriv_check);
  }
  return kExitOk;
}
