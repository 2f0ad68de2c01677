#include "onerel/report.hpp"

#include <cstdint>
#include <cstdio>
#include <sstream>

namespace onerel {

using nlohmann::json;

std::string to_string(const Rational& q) {
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

json to_json(const Word& w) { return to_string(w); }

json to_json(const PieceAnalysis& pieces) {
  json j{
      {"relator_length", pieces.relator_length},
      {"max_piece", pieces.max_piece},
      {"lambda_lower_exclusive", to_string(pieces.lower())},
      {"lambda_upper_inclusive", to_string(PieceAnalysis::upper())},
      {"lambda_feasible", pieces.feasible()},
  };
  if (pieces.witness) {
    j["piece_witness"] = {to_string(pieces.witness->first), to_string(pieces.witness->second)};
  }
  if (auto lambda = pieces.witness_lambda()) j["lambda_witness"] = to_string(*lambda);
  return j;
}

json to_json(const HypothesisReport& r) {
  json lengths = json::array();
  for (const auto& v : r.lengths) {
    json entry{{"length", v.length}, {"subwords", v.subwords}, {"two_connected", v.all_two_connected}};
    if (v.witness) entry["witness"] = to_string(*v.witness);
    lengths.push_back(std::move(entry));
  }
  json j{
      {"rank", r.rank},
      {"rank_ok", r.rank_ok},
      {"relator_length", r.relator_length},
      {"pieces", to_json(r.pieces)},
      {"lambda_feasible", r.lambda_feasible},
      {"subword_lengths", std::move(lengths)},
      {"subwords_ok", r.subwords_ok},
      {"failures", r.failures},
      {"verdict", r.pass ? "PASS" : "FAIL"},
  };
  j["lambda"] = r.lambda ? json(to_string(*r.lambda)) : json(nullptr);
  return j;
}

json to_json(const DehnTrace& trace) {
  json steps = json::array();
  for (const auto& s : trace.steps) {
    if (s.kind == DehnStep::Kind::Conjugate) {
      steps.push_back({{"kind", "conjugate"}, {"conjugator", to_string(s.conjugator)},
                       {"length_after", s.length_after}});
    } else {
      steps.push_back({{"kind", "rewrite"},
                       {"position", s.position},
                       {"fragment", to_string(s.fragment)},
                       {"replacement", to_string(s.replacement)},
                       {"relator_rotation", to_string(s.relator_rotation)},
                       {"exponent", s.exponent},
                       {"offset", s.offset},
                       {"length_after", s.length_after}});
    }
  }
  return {{"input", to_string(trace.input)}, {"steps", std::move(steps)},
          {"residual", to_string(trace.residual)}, {"member", trace.residual.empty()}};
}

json to_json(const KernelVerdict& v) {
  json j{{"verdict", std::string(to_string(v.kind))}};
  if (v.conjugator) j["conjugator"] = to_string(*v.conjugator);
  if (v.failing_generator) j["failing_generator"] = *v.failing_generator;
  return j;
}

json to_json(const MinimizationTrace& trace) {
  json steps = json::array();
  for (const auto& s : trace.steps) {
    json move{{"multiplier", to_string(s.move.multiplier)}};
    json subset = json::array();
    for (int key = 0; key < 64; ++key) {
      if ((s.move.subset >> key) & 1U) subset.push_back(to_string(Letter::from_key(key)));
    }
    move["subset"] = std::move(subset);
    steps.push_back({{"move", std::move(move)}, {"result", to_string(s.result)}, {"length", s.length}});
  }
  return {{"start", to_string(trace.start)}, {"steps", std::move(steps)},
          {"minimal", to_string(trace.minimal)}, {"minimal_length", trace.minimal_length()}};
}

json to_json(const CommutatorSweepReport& r) {
  json counterexamples = json::array();
  for (const auto& c : r.counterexamples) counterexamples.push_back(to_string(c));
  return {{"max_length", r.max_length},
          {"total", r.total},
          {"cyclically_reduced", r.cyclically_reduced},
          {"cyclically_reducible", r.cyclically_reducible},
          {"primitive", r.primitive},
          {"counterexamples", std::move(counterexamples)},
          {"verdict", r.pass() ? "PASS" : "FAIL"}};
}

json to_json(const WhiteheadGraph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edges()) {
    edges.push_back({vertex_label(Letter::from_key(u)), vertex_label(Letter::from_key(v))});
  }
  json cuts = json::array();
  for (Letter l : cut_vertices(g)) cuts.push_back(vertex_label(l));
  return {{"rank", g.rank()},
          {"edges", std::move(edges)},
          {"components", support_components(g)},
          {"cut_vertices", std::move(cuts)},
          {"two_connected", is_two_connected(g)}};
}

std::string digest(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

std::string AnalysisReport::text() const {
  std::ostringstream os;
  os << "command: " << command << '\n';
  for (const auto& [name, d] : inputs) os << "input: " << name << ' ' << d << '\n';
  for (const auto& line : summary) os << line << '\n';
  os << "verdict: " << verdict << '\n';
  return os.str();
}

json AnalysisReport::json() const {
  nlohmann::json in = nlohmann::json::array();
  for (const auto& [name, d] : inputs) in.push_back({{"name", name}, {"digest", d}});
  return {{"command", command}, {"inputs", std::move(in)}, {"verdict", verdict},
          {"results", results}, {"summary", summary}};
}

}  // namespace onerel
