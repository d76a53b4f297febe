// onerel: exact marked-polytope, thickness and splitting-complexity
// computations for two-generator one-relator presentations.
//
// Subcommands:
//   analyze <g1,g2|word> [--char p,q]... [--json] [--trace]
//   verify  [--seed N] [--count N]
//
// Exit codes: 0 success, 1 verification failure, 2 parse error,
// 3 rejected classification, 4 invalid character.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "onerel/report.hpp"
#include "onerel/verify.hpp"

namespace {

constexpr int kExitVerifyFailure = 1;
constexpr int kExitParseError = 2;
constexpr int kExitClassificationError = 3;
constexpr int kExitCharacterError = 4;

std::pair<long long, long long> parse_character_pair(const std::string& text) {
  const std::size_t comma = text.find(',');
  if (comma == std::string::npos) {
    throw onerel::CharacterError("character must be \"p,q\" with integers p and q (got \"" +
                                 text + "\")");
  }
  try {
    std::size_t used = 0;
    const long long p = std::stoll(text.substr(0, comma), &used);
    if (used != comma) throw std::invalid_argument("trailing junk");
    const std::string rest = text.substr(comma + 1);
    const long long q = std::stoll(rest, &used);
    if (used != rest.size()) throw std::invalid_argument("trailing junk");
    return {p, q};
  } catch (const onerel::CharacterError&) {
    throw;
  } catch (const std::exception&) {
    throw onerel::CharacterError("character must be \"p,q\" with integers p and q (got \"" +
                                 text + "\")");
  }
}

int run_analyze(const std::string& presentation_text,
                const std::vector<std::string>& char_texts, bool as_json, bool trace) {
  onerel::Presentation presentation;
  try {
    presentation = onerel::parse_presentation(presentation_text);
  } catch (const onerel::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParseError;
  }

  std::vector<std::pair<long long, long long>> character_values;
  try {
    character_values.reserve(char_texts.size());
    for (const std::string& t : char_texts) character_values.push_back(parse_character_pair(t));
    const onerel::Report report =
        onerel::analyze(presentation, character_values, trace);
    std::cout << (as_json ? onerel::render_json(report) : onerel::render_text(report));
    return 0;
  } catch (const onerel::ClassificationError& e) {
    std::cerr << "classification error: " << e.what() << "\n";
    return kExitClassificationError;
  } catch (const onerel::CharacterError& e) {
    std::cerr << "character error: " << e.what() << "\n";
    return kExitCharacterError;
  }
}

int run_verify(std::uint64_t seed, int count) {
  onerel::verify::Options opts;
  opts.seed = seed;
  opts.count = count;
  const onerel::verify::Summary summary = onerel::verify::run_all(opts);
  for (const onerel::verify::SuiteResult& s : summary.suites) {
    std::cout << "suite " << s.name << ": " << s.cases << " cases, " << s.failures
              << " failures\n";
  }
  if (summary.ok()) {
    std::cout << "verify: " << summary.total_cases() << " cases passed (seed " << seed
              << ", count " << count << ")\n";
    return 0;
  }
  for (const onerel::verify::SuiteResult& s : summary.suites) {
    if (!s.ok()) {
      std::cout << "first failure: " << s.first_failure << "\n";
      break;
    }
  }
  return kExitVerifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact polytope invariants of two-generator one-relator presentations"};
  app.require_subcommand(1);

  std::string presentation_text;
  std::vector<std::string> char_texts;
  bool as_json = false;
  bool trace = false;
  CLI::App* analyze = app.add_subcommand(
      "analyze", "classify a presentation and compute its polytope, markings, "
                 "thickness and splitting complexity");
  analyze->add_option("presentation", presentation_text,
                      "presentation as \"g1,g2|word\"; uppercase letters are inverses")
      ->required();
  analyze->add_option("--char", char_texts,
                      "integral character \"p,q\" (phi(g1)=p, phi(g2)=q); repeatable; "
                      "defaults to all primitive pairs with |entries| <= 5");
  analyze->add_flag("--json", as_json, "emit the deterministic JSON report");
  analyze->add_flag("--trace", trace, "include the full Fox term trace");

  std::uint64_t seed = 42;
  int count = 500;
  CLI::App* verify = app.add_subcommand(
      "verify", "run the seeded randomised verification suites");
  verify->add_option("--seed", seed, "random seed (default 42)");
  verify->add_option("--count", count, "cases per suite (default 500)")
      ->check(CLI::NonNegativeNumber);

  CLI11_PARSE(app, argc, argv);

  if (analyze->parsed()) return run_analyze(presentation_text, char_texts, as_json, trace);
  return run_verify(seed, count);
}
