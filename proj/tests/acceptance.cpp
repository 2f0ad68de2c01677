// Acceptance suite.  Prints one [PASS]/[FAIL] line per criterion.
//
//   acceptance [--only 1,9,...] [--full] [--expect-fail 4,5]
//
// --full enumerates every 3-factor product with conjugators of length <= 3
// for criteria 9 and 10 (hours on one core); the default enumerates all
// products of at most 2 factors, all 3-factor products with conjugators of
// length <= 2 and a seeded sample of the remaining 3-factor products.
// --expect-fail lists criteria whose failure is documented; the exit status
// is nonzero if any other criterion fails or a listed one passes.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cli.hpp"
#include "onerel/automorphisms.hpp"
#include "onerel/primitivity.hpp"
#include "onerel/small_cancellation.hpp"
#include "onerel/text_format.hpp"
#include "onerel/whitehead_graph.hpp"
#include "oracle.hpp"

using namespace onerel;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Settings {
  bool full = false;
  std::size_t sample = 1'000'000;
};

std::string str(std::size_t n) { return std::to_string(n); }

// ---------------------------------------------------------------- check-theorem

struct CliRun {
  int code = -1;
  nlohmann::json report;
};

CliRun check_theorem(const std::string& relator, int rank) {
  const fs::path dir = fs::temp_directory_path() / ("onerel_acceptance_" + std::to_string(std::random_device{}()));
  fs::create_directories(dir);
  const fs::path file = dir / "relator.presentation";
  std::ofstream(file) << "rank " << rank << "\nrelator " << relator << "\n";
  std::ostringstream out, err;
  CliRun r;
  r.code = cli::run({"check-theorem", file.string(), "--json-style"}, out, err);
  fs::remove_all(dir);
  if (!out.str().empty()) r.report = nlohmann::json::parse(out.str());
  return r;
}

Outcome squared_relators_pass() {
  Outcome o{true, ""};
  for (auto [rel, rank] : {std::pair{"(x1^2 x2^2 x3^2)^2", 3}, {"(x1^2 x2^2 x3^2 x4^2)^2", 4},
                           {"([x1,x2][x3,x4])^2", 4}}) {
    const CliRun r = check_theorem(rel, rank);
    const bool ok = r.code == 0 && r.report.value("verdict", "") == "PASS";
    o.pass = o.pass && ok;
    o.detail += std::string(o.detail.empty() ? "" : "; ") + rel + " -> " +
                r.report.value("verdict", "no report") + " (lambda " +
                r.report["results"].value("lambda", std::string("none")) + ")";
  }
  return o;
}

Outcome surface_relators_fail() {
  Outcome o{true, ""};
  for (auto [rel, rank] : {std::pair{"x1^2 x2^2 x3^2", 3}, {"[x1,x2][x3,x4]", 4}}) {
    const CliRun r = check_theorem(rel, rank);
    const auto failures = r.report["results"].value("failures", std::vector<std::string>{});
    const bool ok = r.code == 1 && r.report.value("verdict", "") == "FAIL" && !failures.empty();
    o.pass = o.pass && ok;
    std::string names;
    for (const auto& f : failures) names += (names.empty() ? "" : ",") + f;
    o.detail += std::string(o.detail.empty() ? "" : "; ") + rel + " -> " +
                r.report.value("verdict", "no report") + " [" + names + "]";
  }
  return o;
}

// ---------------------------------------------------------------- kernel pipeline

Outcome kernel_pipeline(ExampleKind kind) {
  const SurfaceExample ex = surface_example(kind, 4, 1);
  const Certification cert = certify_automorphism(ex.map);
  if (const auto* refused = std::get_if<NotAnAutomorphism>(&cert)) {
    std::string lengths;
    for (const auto& w : refused->reduced_tuple) lengths += (lengths.empty() ? "" : ",") + str(w.size());
    return {false, "certify_automorphism refused: Nielsen reduction stalls at image lengths (" +
                       lengths + "); the map is not an automorphism of F4"};
  }
  const KernelVerdict v = classify_kernel(std::get<Automorphism>(cert), ex.presentation);
  return {v.kind == KernelVerdict::Kind::NonInnerKernelElement,
          "certified; verdict " + std::string(to_string(v.kind))};
}

Outcome commutator_not_inner_by_r() {
  const SurfaceExample phi = surface_example(ExampleKind::NonorientablePhi, 4, 1);
  const SurfaceExample psi = surface_example(ExampleKind::NonorientablePsi, 4, 1);
  if (!phi.automorphism || !psi.automorphism) {
    return {false, std::string("cannot form the commutator: ") +
                       (phi.automorphism ? "" : "phi ") + (psi.automorphism ? "" : "psi ") +
                       "does not certify as an automorphism"};
  }
  const Automorphism& f = *phi.automorphism;
  const Automorphism& g = *psi.automorphism;
  const Automorphism gamma = compose(compose(f, g), compose(f.inverse(), g.inverse()));
  const KernelVerdict v = classify_kernel(gamma, phi.presentation);
  return {v.in_kernel() && v.kind != KernelVerdict::Kind::InnerByR,
          "verdict " + std::string(to_string(v.kind))};
}

// ---------------------------------------------------------------- primitivity

template <typename Visit>
void for_each_cyclically_reduced(int rank, std::size_t length, Visit&& visit) {
  for_each_reduced_word(rank, length, [&](const Word& w) {
    if (is_cyclically_reduced(w)) visit(w);
  });
}

Outcome cut_vertex_suite() {
  std::size_t words = 0, primitive = 0, violations = 0;
  for (auto [rank, max_len] : {std::pair{2, std::size_t{8}}, {3, std::size_t{6}}}) {
    for (std::size_t len = 2; len <= max_len; ++len) {
      for_each_cyclically_reduced(rank, len, [&](const Word& w) {
        ++words;
        if (!is_primitive(w)) return;
        ++primitive;
        if (is_two_connected(wh_graph_cyclic(CyclicWord(w)))) ++violations;
      });
    }
  }
  return {violations == 0 && primitive > 0, str(words) + " words, " + str(primitive) +
                                                " primitive, " + str(violations) + " violations"};
}

Outcome commutator_sweep() {
  const CommutatorSweepReport r = verify_commutator_primitives(8);
  return {r.pass(), str(r.total) + " commutator-subgroup words, " + str(r.cyclically_reduced) +
                        " with x1 c cyclically reduced, " + str(r.primitive) + " primitive (c = 1), " +
                        str(r.counterexamples.size()) + " counterexamples"};
}

Outcome f2_suite() {
  std::size_t words = 0, primitive = 0, violations = 0;
  for (std::size_t len = 1; len <= 10; ++len) {
    for_each_cyclically_reduced(2, len, [&](const Word& w) {
      ++words;
      if (!is_primitive(w)) return;
      ++primitive;
      if (!f2_necessary_condition(w)) ++violations;
    });
  }
  return {violations == 0 && primitive > 0, str(words) + " words, " + str(primitive) +
                                                " primitive, " + str(violations) + " violations"};
}

Outcome inversion_invariance() {
  std::mt19937_64 rng(20240611);
  std::size_t violations = 0;
  for (int trial = 0; trial < 10'000; ++trial) {
    const int rank = 2 + trial % 4;
    const Word w = oracle::to_word(oracle::random_reduced(rng, rank, 40), rank);
    if (!(wh_graph(w) == wh_graph(invert(w)))) ++violations;
  }
  return {violations == 0, "10000 random words, " + str(violations) + " violations"};
}

Outcome orbit_cross_check() {
  std::size_t words = 0, primitive = 0, disagreements = 0;
  for (std::size_t len = 1; len <= 5; ++len) {
    for_each_reduced_word(2, len, [&](const Word& w) {
      ++words;
      const bool fast = is_primitive(w);
      const bool slow = oracle::orbit_min_length(oracle::to_seq(w), 2) == 1;
      primitive += fast;
      disagreements += fast != slow;
    });
  }
  return {disagreements == 0, str(words) + " words, " + str(primitive) + " primitive, " +
                                  str(disagreements) + " disagreements"};
}

// ---------------------------------------------------------------- normal closure

struct Closure {
  Presentation p;
  std::vector<std::vector<Letter>> small;  // conjugates with |g| <= 2
  std::vector<std::vector<Letter>> large;  // conjugates with |g| <= 3
};

Closure make_closure(const char* relator, int rank) {
  Closure c{Presentation(parse_word(relator, rank)), {}, {}};
  for (std::size_t len = 0; len <= 3; ++len) {
    for_each_reduced_word(rank, len, [&](const Word& g) {
      for (int e : {1, -1}) {
        const Word r = e > 0 ? c.p.relator_word() : invert(c.p.relator_word());
        std::vector<Letter> raw(g.begin(), g.end());
        raw.insert(raw.end(), r.begin(), r.end());
        const Word gi = invert(g);
        raw.insert(raw.end(), gi.begin(), gi.end());
        if (len <= 2) c.small.push_back(raw);
        c.large.push_back(std::move(raw));
      }
    });
  }
  return c;
}

// Calls visit(product) for every enumerated product of conjugates.
template <typename Visit>
std::size_t for_each_product(const Closure& c, const Settings& s, Visit&& visit) {
  const int rank = c.p.rank();
  std::size_t count = 0;
  std::vector<Letter> raw;
  auto emit = [&](std::initializer_list<const std::vector<Letter>*> factors) {
    raw.clear();
    for (const auto* f : factors) raw.insert(raw.end(), f->begin(), f->end());
    visit(Word(raw, rank));
    ++count;
  };
  const std::vector<Letter> none;
  emit({&none});
  for (const auto& a : c.large) emit({&a});
  for (const auto& a : c.large)
    for (const auto& b : c.large) emit({&a, &b});
  const auto& triple = s.full ? c.large : c.small;
  for (const auto& a : triple)
    for (const auto& b : triple)
      for (const auto& d : triple) emit({&a, &b, &d});
  if (!s.full) {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<std::size_t> pick(0, c.large.size() - 1);
    for (std::size_t i = 0; i < s.sample; ++i) {
      emit({&c.large[pick(rng)], &c.large[pick(rng)], &c.large[pick(rng)]});
    }
  }
  return count;
}

const std::vector<std::pair<const char*, int>> kClosureRelators{{"x1^2 x2^2 x3^2 x4^2", 4},
                                                                 {"(x1^2 x2^2 x3^2)^2", 3}};

std::string regime(const Settings& s) {
  return s.full ? "exhaustive" : "k<=2 exhaustive, k=3 exhaustive for |g|<=2 plus " + str(s.sample) +
                                     " seeded samples";
}

Outcome dehn_closure(const Settings& s) {
  Outcome o{true, regime(s)};
  for (auto [rel, rank] : kClosureRelators) {
    const Closure c = make_closure(rel, rank);
    std::size_t rejected = 0, bad_replay = 0;
    const std::size_t n = for_each_product(c, s, [&](const Word& w) {
      const DehnTrace t = dehn_reduce(w, c.p);
      if (!t.residual.empty()) ++rejected;
      else if (!replay(t, c.p).ok()) ++bad_replay;
    });
    o.pass = o.pass && rejected == 0 && bad_replay == 0;
    o.detail += "; " + std::string(rel) + ": " + str(n) + " products, " + str(rejected) + " rejected, " +
                str(bad_replay) + " replay failures";
  }
  return o;
}

Outcome greendlinger(const Settings& s) {
  Outcome o{true, regime(s)};
  for (auto [rel, rank] : kClosureRelators) {
    const Closure c = make_closure(rel, rank);
    const HypothesisReport h = check_hypotheses(c.p);
    if (!h.lambda) return {false, std::string(rel) + ": no lambda witness"};
    const long long num = h.lambda->numerator();
    const long long den = h.lambda->denominator();
    const auto len = static_cast<long long>(c.p.relator_length());
    std::size_t checked = 0, violations = 0;
    for_each_product(c, s, [&](const Word& w) {
      const Word core = cyclic_reduce(w).reduced;
      if (core.empty()) return;
      ++checked;
      // fragment > (1 - 3 lambda) |r|
      const auto frag = static_cast<long long>(longest_relator_fragment(core, c.p).length);
      if (!(frag * den > (den - 3 * num) * len)) ++violations;
    });
    o.pass = o.pass && violations == 0;
    o.detail += "; " + std::string(rel) + " (lambda " + std::to_string(num) + "/" + std::to_string(den) +
                "): " + str(checked) + " nontrivial cyclically reduced words, " + str(violations) +
                " violations";
  }
  return o;
}

std::set<int> parse_ids(const std::string& csv) {
  std::set<int> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.insert(std::stoi(item));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance suite"};
  Settings settings;
  std::string only, expect_fail;
  app.add_flag("--full", settings.full, "Exhaustive 3-factor enumeration for criteria 9 and 10");
  app.add_option("--sample", settings.sample, "Random 3-factor samples in the default regime");
  app.add_option("--only", only, "Comma-separated criteria to run");
  app.add_option("--expect-fail", expect_fail, "Comma-separated criteria with documented failures");
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"check-theorem passes on squared surface relators", squared_relators_pass},
      {"check-theorem fails on surface relators with a named condition", surface_relators_fail},
      {"non-orientable x1 twist is a certified non-inner kernel element",
       [] { return kernel_pipeline(ExampleKind::NonorientablePhi); }},
      {"non-orientable x1/xn twist is a certified non-inner kernel element",
       [] { return kernel_pipeline(ExampleKind::NonorientablePsi); }},
      {"commutator of the two twists is a kernel element not inner by R", commutator_not_inner_by_r},
      {"primitive cyclically reduced words have a cut vertex", cut_vertex_suite},
      {"x1 c with c in [F2,F2], |c| <= 8, is never a cyclically reduced primitive", commutator_sweep},
      {"primitive rank-2 words satisfy the syllable condition", f2_suite},
      {"Dehn accepts normal-closure products and replays them", [&] { return dehn_closure(settings); }},
      {"normal-closure words contain a long relator fragment", [&] { return greendlinger(settings); }},
      {"Whitehead graph is invariant under inversion", inversion_invariance},
      {"is_primitive agrees with breadth-first orbit search", orbit_cross_check},
  };

  const std::set<int> selected = parse_ids(only);
  const std::set<int> expected = parse_ids(expect_fail);
  int unexpected = 0, passed = 0, failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (!selected.empty() && !selected.count(id)) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool documented = expected.count(id) > 0;
    std::printf("[%s] %2d %s: %s (%.1fs)%s\n", o.pass ? "PASS" : "FAIL", id, criteria[i].first.c_str(),
                o.detail.c_str(), secs,
                documented ? (o.pass ? " [listed as expected failure]" : " [expected failure]") : "");
    std::fflush(stdout);
    (o.pass ? passed : failed)++;
    if (o.pass == documented) ++unexpected;
  }
  std::printf("%d passed, %d failed, %d unexpected\n", passed, failed, unexpected);
  return unexpected == 0 ? 0 : 1;
}
