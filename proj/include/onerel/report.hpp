#pragma once

// Structured reports shared by the CLI and the test suites.  Every result
// type has a JSON form; AnalysisReport renders either a plain-text summary or
// the JSON document, and both carry the same verdict string.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "onerel/automorphisms.hpp"
#include "onerel/primitivity.hpp"
#include "onerel/small_cancellation.hpp"
#include "onerel/whitehead_graph.hpp"

namespace onerel {

std::string to_string(const Rational& q);  // "7/48"

nlohmann::json to_json(const Word& w);
nlohmann::json to_json(const PieceAnalysis& pieces);
nlohmann::json to_json(const HypothesisReport& report);
nlohmann::json to_json(const DehnTrace& trace);
nlohmann::json to_json(const KernelVerdict& verdict);
nlohmann::json to_json(const MinimizationTrace& trace);
nlohmann::json to_json(const CommutatorSweepReport& report);
nlohmann::json to_json(const WhiteheadGraph& g);

// FNV-1a 64-bit over the raw bytes, as "fnv1a64:<16 hex digits>".
std::string digest(std::string_view bytes);

struct AnalysisReport {
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;  // name, digest
  std::string verdict;
  nlohmann::json results = nlohmann::json::object();
  std::vector<std::string> summary;

  std::string text() const;
  nlohmann::json json() const;
};

}  // namespace onerel
