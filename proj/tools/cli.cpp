#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <ostream>

#include <CLI11.hpp>

#include "onerel/automorphisms.hpp"
#include "onerel/errors.hpp"
#include "onerel/primitivity.hpp"
#include "onerel/report.hpp"
#include "onerel/small_cancellation.hpp"
#include "onerel/text_format.hpp"
#include "onerel/whitehead_graph.hpp"

namespace onerel::cli {

namespace {

struct Outcome {
  AnalysisReport report;
  int code = kSuccess;
};

struct Options {
  bool json_style = false;
  std::string presentation_file;
  std::string automorphism_file;
  std::string word;
  int rank = 0;
  bool cyclic = false;
  bool dot = false;
  bool trace = false;
  std::string kind;
  int power = 1;
  std::string out_dir = ".";
  std::size_t max_length = 8;
};

struct LoadedPresentation {
  std::string bytes;
  PresentationFile file;
  Presentation presentation;
};

LoadedPresentation load_presentation(const std::string& path) {
  std::string bytes = read_file(path);
  PresentationFile file = parse_presentation_file(bytes);
  Presentation p(file.relator);
  return {std::move(bytes), std::move(file), std::move(p)};
}

Outcome check_theorem(const Options& o) {
  const auto loaded = load_presentation(o.presentation_file);
  const HypothesisReport r = check_hypotheses(loaded.presentation);
  Outcome out;
  out.report.command = "check-theorem";
  out.report.inputs.emplace_back(o.presentation_file, digest(loaded.bytes));
  out.report.verdict = r.pass ? "PASS" : "FAIL";
  out.report.results = to_json(r);
  auto& s = out.report.summary;
  s.push_back("relator: " + to_string(loaded.presentation.relator_word()));
  s.push_back("rank: " + std::to_string(r.rank) + (r.rank_ok ? " (ok)" : " (needs >= 3)"));
  s.push_back("relator length: " + std::to_string(r.relator_length));
  s.push_back("max piece: " + std::to_string(r.pieces.max_piece));
  s.push_back("feasible lambda: (" + to_string(r.pieces.lower()) + ", " +
              to_string(PieceAnalysis::upper()) + "]" + (r.lambda_feasible ? "" : " empty"));
  if (r.lambda) s.push_back("lambda witness: " + to_string(*r.lambda));
  for (const auto& v : r.lengths) {
    std::string line = "subwords of length " + std::to_string(v.length) + ": " +
                       std::to_string(v.subwords) + (v.all_two_connected ? " all 2-connected" : " FAIL");
    if (v.witness) line += " (witness " + to_string(*v.witness) + ")";
    s.push_back(std::move(line));
  }
  for (const auto& f : r.failures) s.push_back("failed condition: " + f);
  out.code = r.pass ? kSuccess : kNegative;
  return out;
}

Outcome pieces(const Options& o) {
  const auto loaded = load_presentation(o.presentation_file);
  const PieceAnalysis a = analyze_pieces(loaded.presentation);
  Outcome out;
  out.report.command = "pieces";
  out.report.inputs.emplace_back(o.presentation_file, digest(loaded.bytes));
  out.report.verdict = a.feasible() ? "C'(1/6)" : "not C'(1/6)";
  out.report.results = to_json(a);
  out.report.results["symmetrized_set_size"] = loaded.presentation.symmetrized().size();
  auto& s = out.report.summary;
  s.push_back("relator length: " + std::to_string(a.relator_length));
  s.push_back("symmetrized set size: " + std::to_string(loaded.presentation.symmetrized().size()));
  s.push_back("max piece: " + std::to_string(a.max_piece));
  if (a.witness) {
    s.push_back("piece witness: " + to_string(a.witness->first) + " | " + to_string(a.witness->second));
  }
  s.push_back("feasible lambda: (" + to_string(a.lower()) + ", " + to_string(PieceAnalysis::upper()) +
              "]" + (a.feasible() ? "" : " empty"));
  out.code = a.feasible() ? kSuccess : kNegative;
  return out;
}

Outcome classify(const Options& o) {
  const auto loaded = load_presentation(o.presentation_file);
  const std::string aut_bytes = read_file(o.automorphism_file);
  const Endomorphism e = parse_endomorphism(aut_bytes);
  Outcome out;
  out.report.command = "classify";
  out.report.inputs.emplace_back(o.presentation_file, digest(loaded.bytes));
  out.report.inputs.emplace_back(o.automorphism_file, digest(aut_bytes));
  if (e.rank() != loaded.presentation.rank()) {
    throw RankError("automorphism rank " + std::to_string(e.rank()) + " differs from presentation rank " +
                    std::to_string(loaded.presentation.rank()));
  }
  const Certification cert = certify_automorphism(e);
  if (const auto* refused = std::get_if<NotAnAutomorphism>(&cert)) {
    out.report.verdict = "NotAnAutomorphism";
    nlohmann::json tuple = nlohmann::json::array();
    for (const auto& w : refused->reduced_tuple) tuple.push_back(to_string(w));
    out.report.results = {{"verdict", "NotAnAutomorphism"}, {"reduced_tuple", tuple}};
    out.report.summary.push_back("the image tuple is not a free basis");
    out.code = kNegative;
    return out;
  }
  const Automorphism& a = std::get<Automorphism>(cert);
  const KernelVerdict v = classify_kernel(a, loaded.presentation);
  out.report.verdict = std::string(to_string(v.kind));
  out.report.results = to_json(v);
  nlohmann::json inverse = nlohmann::json::array();
  for (const auto& w : a.inverse_map().images()) inverse.push_back(to_string(w));
  out.report.results["inverse"] = std::move(inverse);
  out.report.summary.push_back("certified automorphism of F" + std::to_string(a.rank()));
  if (v.conjugator) out.report.summary.push_back("conjugator: " + to_string(*v.conjugator));
  if (v.failing_generator) {
    out.report.summary.push_back("image of x" + std::to_string(*v.failing_generator) +
                                 " differs modulo R");
  }
  out.code = v.in_kernel() ? kSuccess : kNegative;
  return out;
}

Outcome examples(const Options& o) {
  const auto kind = parse_example_kind(o.kind);
  if (!kind) throw CLI::ValidationError("--kind", "unknown example kind '" + o.kind + "'");
  const SurfaceExample ex = surface_example(*kind, o.rank, o.power);
  const std::string stem = std::string(to_string(*kind)) + "_n" + std::to_string(o.rank) + "_p" +
                           std::to_string(o.power);
  const std::filesystem::path dir(o.out_dir);
  std::filesystem::create_directories(dir);
  const auto pres_path = dir / (stem + ".presentation");
  const auto aut_path = dir / (stem + ".automorphism");
  const std::string pres_text = format_presentation(ex.rank, ex.relator);
  const std::string aut_text = format_endomorphism(ex.map);
  std::ofstream(pres_path, std::ios::binary) << pres_text;
  std::ofstream(aut_path, std::ios::binary) << aut_text;

  Outcome out;
  out.report.command = "examples";
  out.report.verdict = ex.automorphism ? "automorphism" : "not-an-automorphism";
  out.report.results = {{"kind", std::string(to_string(*kind))},
                        {"rank", ex.rank},
                        {"power", ex.power},
                        {"relator", to_string(ex.relator)},
                        {"presentation_file", pres_path.string()},
                        {"automorphism_file", aut_path.string()},
                        {"presentation_digest", digest(pres_text)},
                        {"automorphism_digest", digest(aut_text)},
                        {"certified", ex.automorphism.has_value()}};
  out.report.summary.push_back("wrote " + pres_path.string());
  out.report.summary.push_back("wrote " + aut_path.string());
  out.code = ex.automorphism ? kSuccess : kNegative;
  return out;
}

Outcome primitive(const Options& o) {
  const Word w = parse_word(o.word, o.rank);
  if (w.empty()) throw PreconditionError("primitivity of the empty word is undefined");
  const MinimizationTrace t = whitehead_minimize(w);
  const bool prim = t.minimal_length() == 1;
  Outcome out;
  out.report.command = "primitive";
  out.report.verdict = prim ? "true" : "false";
  out.report.results = {{"word", to_string(w)}, {"rank", o.rank}, {"primitive", prim},
                        {"minimization", to_json(t)}};
  if (o.rank == 2) out.report.results["f2_necessary_condition"] = f2_necessary_condition(w);
  out.report.summary.push_back("word: " + to_string(w));
  out.report.summary.push_back("orbit minimum: " + to_string(t.minimal) + " (length " +
                               std::to_string(t.minimal_length()) + ")");
  if (o.trace) {
    for (const auto& step : t.steps) {
      out.report.summary.push_back("  -> " + to_string(step.result));
    }
  }
  out.code = prim ? kSuccess : kNegative;
  return out;
}

Outcome member(const Options& o) {
  const auto loaded = load_presentation(o.presentation_file);
  const Word w = parse_word(o.word, loaded.presentation.rank());
  const DehnTrace t = dehn_reduce(w, loaded.presentation);
  const bool in = t.residual.empty();
  Outcome out;
  out.report.command = "member";
  out.report.inputs.emplace_back(o.presentation_file, digest(loaded.bytes));
  out.report.verdict = in ? "true" : "false";
  out.report.results = to_json(t);
  out.report.summary.push_back("word: " + to_string(w));
  out.report.summary.push_back("rewrites: " + std::to_string(t.steps.size()));
  out.report.summary.push_back("residual: " + to_string(t.residual));
  out.code = in ? kSuccess : kNegative;
  return out;
}

Outcome whgraph(const Options& o, std::ostream& stream) {
  const Word w = o.rank > 0 ? parse_word(o.word, o.rank) : parse_word(o.word);
  WhiteheadGraph g = o.cyclic ? wh_graph_cyclic(cyclic_reduce(w).core) : wh_graph(w);
  Outcome out;
  out.report.command = "whgraph";
  out.report.verdict = is_two_connected(g) ? "two-connected" : "not-two-connected";
  if (o.dot) {
    stream << to_dot(g);
    out.report.command.clear();
    return out;
  }
  out.report.results = to_json(g);
  out.report.results["word"] = to_string(w);
  out.report.results["cyclic"] = o.cyclic;
  out.report.summary.push_back("word: " + to_string(w) + (o.cyclic ? " (cyclic)" : ""));
  out.report.summary.push_back("edges: " + std::to_string(g.edge_count()));
  std::string cuts = "cut vertices:";
  for (Letter l : cut_vertices(g)) cuts += " " + vertex_label(l);
  out.report.summary.push_back(cuts);
  return out;
}

Outcome verify_1_3(const Options& o) {
  const CommutatorSweepReport r = verify_commutator_primitives(o.max_length);
  Outcome out;
  out.report.command = "verify-1-3";
  out.report.verdict = r.pass() ? "PASS" : "FAIL";
  out.report.results = to_json(r);
  auto& s = out.report.summary;
  s.push_back("max |c|: " + std::to_string(r.max_length));
  s.push_back("commutator-subgroup words c: " + std::to_string(r.total));
  s.push_back("x1 c cyclically reduced: " + std::to_string(r.cyclically_reduced));
  s.push_back("x1 c cyclically reducible (skipped): " + std::to_string(r.cyclically_reducible));
  s.push_back("primitive survivors: " + std::to_string(r.primitive));
  for (const auto& c : r.counterexamples) s.push_back("counterexample c = " + to_string(c));
  out.code = r.pass() ? kSuccess : kNegative;
  return out;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Whitehead graphs, small cancellation and automorphism kernels of one-relator groups",
               "onerel"};
  app.require_subcommand(1);
  Options o;
  std::function<Outcome()> action;

  auto json_flag = [&](CLI::App* sub) {
    sub->add_flag("--json-style", o.json_style, "Emit the structured JSON report");
  };

  auto* check = app.add_subcommand("check-theorem", "Check the kernel-theorem hypotheses for a relator");
  check->add_option("presentation", o.presentation_file)->required();
  json_flag(check);
  check->callback([&] { action = [&] { return check_theorem(o); }; });

  auto* pcs = app.add_subcommand("pieces", "Piece analysis and C'(lambda) feasibility");
  pcs->add_option("presentation", o.presentation_file)->required();
  json_flag(pcs);
  pcs->callback([&] { action = [&] { return pieces(o); }; });

  auto* cls = app.add_subcommand("classify", "Classify an automorphism against Stab(R), Ker and Inn_R");
  cls->add_option("presentation", o.presentation_file)->required();
  cls->add_option("automorphism", o.automorphism_file)->required();
  json_flag(cls);
  cls->callback([&] { action = [&] { return classify(o); }; });

  auto* ex = app.add_subcommand("examples", "Write a surface-relator example presentation and map");
  ex->add_option("--kind", o.kind,
                 "nonorientable-phi | nonorientable-psi | orientable-phi | orientable-psi")
      ->required();
  ex->add_option("--rank,-n", o.rank, "Number of generators")->required();
  ex->add_option("--power,-p", o.power, "Relator power")->capture_default_str();
  ex->add_option("--out-dir,-o", o.out_dir, "Output directory")->capture_default_str();
  json_flag(ex);
  ex->callback([&] { action = [&] { return examples(o); }; });

  auto* prim = app.add_subcommand("primitive", "Whitehead primitivity test");
  prim->add_option("word", o.word)->required();
  prim->add_option("--rank,-n", o.rank, "Rank of the free group")->required()->check(CLI::PositiveNumber);
  prim->add_flag("--trace", o.trace, "List the minimization steps");
  json_flag(prim);
  prim->callback([&] { action = [&] { return primitive(o); }; });

  auto* mem = app.add_subcommand("member", "Dehn's algorithm: is the word in the normal closure?");
  mem->add_option("word", o.word)->required();
  mem->add_option("presentation", o.presentation_file)->required();
  json_flag(mem);
  mem->callback([&] { action = [&] { return member(o); }; });

  auto* wh = app.add_subcommand("whgraph", "Whitehead graph of a word");
  wh->add_option("word", o.word)->required();
  wh->add_option("--rank,-n", o.rank, "Rank (default: largest generator index)");
  wh->add_flag("--cyclic", o.cyclic, "Cyclically reduce and include the external edge");
  wh->add_flag("--dot", o.dot, "Write DOT to stdout");
  json_flag(wh);
  wh->callback([&] { action = [&] { return whgraph(o, out); }; });

  auto* v13 = app.add_subcommand("verify-1-3", "Exhaustive check that x1 c (c in [F2,F2]) is never primitive");
  v13->add_option("--max-length", o.max_length, "Largest |c| enumerated")->capture_default_str();
  json_flag(v13);
  v13->callback([&] { action = [&] { return verify_1_3(o); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  try {
    Outcome result = action();
    if (!result.report.command.empty()) {
      if (o.json_style) {
        out << result.report.json().dump(2) << '\n';
      } else {
        out << result.report.text();
      }
    }
    return result.code;
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const NotSmallCancellation& e) {
    err << "precondition: " << e.what() << '\n';
    return kPrecondition;
  } catch (const PreconditionError& e) {
    err << "precondition: " << e.what() << '\n';
    // Bad example parameters are usage errors rather than input preconditions.
    return o.kind.empty() ? kPrecondition : kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"onerel"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace onerel::cli
