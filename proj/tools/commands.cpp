#include "commands.hpp"

#include <fstream>
#include <random>
#include <sstream>

#include "quiver/formula.hpp"
#include "quiver/io.hpp"
#include "quiver/search.hpp"
#include "quiver/standard.hpp"

namespace quiver::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

ExchangeMatrix load_b0(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  Json doc = Json::parse(in);
  const Json& rows = doc.is_object() ? doc.at("b") : doc;
  return ExchangeMatrix(matrix_from_json(rows));
}

ExchangeMatrix initial_b0(const RunConfig& config) {
  if (config.b0_file) return load_b0(*config.b0_file);
  return straight_a(config.n);
}

bool refuse_custom_b0(const RunConfig& config, std::ostream& err) {
  if (!config.b0_file) return false;
  err << "error: " << config.command << " evaluates the permutation formula, which is defined only for straight A_n;"
      << " it is disabled with --b0-file\n";
  return true;
}

Permutation reversed_formula(const PictureWord& w, const Permutation& sigma) {
  Permutation product = Permutation::identity(sigma.size());
  for (const SignedGenerator& g : w.factors) product = transposition_of(g, sigma.size()) * product;
  return sigma * product * sigma.inverse();
}

FormulaFn selected_formula(const RunConfig& config) {
  if (config.corrupt_formula) return reversed_formula;
  return formula_permutation;
}

std::string color_name(const ExtendedExchangeMatrix& m, int k) {
  try {
    return vertex_color(m, k) == VertexColor::Green ? "green" : "red";
  } catch (const QuiverError&) {
    return "mixed";
  }
}

}  // namespace

int cmd_mutate(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const ExchangeMatrix b0 = initial_b0(config);
  const MutationSequence seq = parse_sequence(config.sequence);
  for (int k : seq.steps) {
    if (k < 1 || k > b0.n()) {
      err << "error: vertex " << k << " outside 1.." << b0.n() << '\n';
      return kExitUsage;
    }
  }
  const ExtendedExchangeMatrix start = framed(b0);
  const ExtendedExchangeMatrix state = apply_sequence(start, seq);

  std::optional<PictureWord> word;
  std::optional<Permutation> sigma;
  if (!config.b0_file) {
    TrackedState tracked = TrackedState::start(start);
    for (int k : seq.steps) tracked = step_at(tracked, k);
    word = word_from_sequence(start, seq);
    sigma = tracked.sigma;
  }

  switch (config.format) {
    case Format::Dot:
      out << ice_quiver_dot(state);
      break;
    case Format::Json: {
      Json doc{{"sequence", to_json(seq)}, {"state", to_json(state)}};
      Json colors = Json::array();
      for (int k = 1; k <= state.n(); ++k) colors.push_back(color_name(state, k));
      doc["colors"] = std::move(colors);
      doc["word"] = word ? to_json(*word) : Json(nullptr);
      doc["sigma"] = sigma ? Json(sigma->cycles()) : Json(nullptr);
      out << doc.dump() << '\n';
      break;
    }
    case Format::Text:
      out << "sequence: " << to_string(seq) << '\n' << format_state(state) << "colors:";
      for (int k = 1; k <= state.n(); ++k) out << ' ' << k << ':' << color_name(state, k);
      out << '\n';
      if (word) {
        out << "word: " << word->display() << '\n' << "sigma: " << sigma->cycles() << '\n';
      } else {
        out << "word, sigma: not available for a custom B0\n";
      }
      break;
  }
  return kExitOk;
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (refuse_custom_b0(config, err)) return kExitUsage;
  const FormulaFn formula = selected_formula(config);
  const ExtendedExchangeMatrix start = framed(straight_a(config.n));
  const bool json = config.format == Format::Json;

  std::size_t mgs_checked = 0;
  std::size_t mgs_mismatch = 0;
  for (const MgsRecord& rec : enumerate_mgs(config.n, {std::nullopt, config.workers})) {
    const FormulaReport report = verify(start, rec.sequence, formula);
    ++mgs_checked;
    if (report.verdict != Verdict::Match) ++mgs_mismatch;
    if (json) {
      out << to_json(report).dump() << '\n';
    } else {
      out << "mgs " << to_string(rec.sequence) << "  word " << report.word.display() << "  formula "
          << report.formula_perm.cycles() << "  observed "
          << (report.observed_perm ? report.observed_perm->cycles() : "-") << "  " << to_string(report.verdict)
          << '\n';
    }
    if (report.verdict != Verdict::Match) err << "mismatch: mgs " << to_string(rec.sequence) << '\n';
  }

  std::size_t loops_checked = 0;
  std::size_t loop_mismatch = 0;
  std::size_t states = 0;
  if (config.max_depth > 0) {
    const ExchangeGraph graph = build_exchange_graph(config.n);
    states = graph.size();
    for (const ExtendedExchangeMatrix& node : graph.nodes) {
      for (const LoopRecord& loop : enumerate_loops(node, config.max_depth, config.workers)) {
        const FormulaReport report = verify(node, loop.sequence, formula);
        ++loops_checked;
        if (report.verdict == Verdict::Match) continue;
        ++loop_mismatch;
        err << "mismatch: loop " << to_string(loop.sequence) << " at c =\n" << format_matrix(node.c());
        if (json) out << to_json(report).dump() << '\n';
      }
    }
  }

  const bool ok = mgs_mismatch == 0 && loop_mismatch == 0;
  if (json) {
    out << Json{{"summary",
                 {{"n", config.n},
                  {"mgs", mgs_checked},
                  {"mgs_mismatch", mgs_mismatch},
                  {"loop_states", states},
                  {"loops", loops_checked},
                  {"loop_mismatch", loop_mismatch},
                  {"ok", ok}}}}
               .dump()
        << '\n';
  } else {
    out << "maximal green sequences: " << mgs_checked << " checked, " << mgs_mismatch << " mismatched\n";
    if (config.max_depth > 0) {
      out << "loop sequences (length <= " << config.max_depth << ", " << states << " states): " << loops_checked
          << " checked, " << loop_mismatch << " mismatched\n";
    }
    out << (ok ? "OK" : "FAILED") << '\n';
  }
  return ok ? kExitOk : kExitFailed;
}

int cmd_census(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (refuse_custom_b0(config, err)) return kExitUsage;
  const MgsCensus census = mgs_census(config.n, {std::nullopt, config.workers});
  if (config.format == Format::Json) {
    out << to_json(census).dump(2) << '\n';
    return kExitOk;
  }
  out << "n: " << census.n << "\ncount: " << census.count << "\nlengths:";
  for (const auto& [len, count] : census.lengths) out << ' ' << len << ':' << count;
  out << "\npermutations:";
  for (const auto& [cycles, count] : census.permutations) out << ' ' << cycles << ':' << count;
  out << "\nmin length: " << census.min_length << "\nmax length: " << census.max_length << '\n';
  return kExitOk;
}

int cmd_enumerate(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (refuse_custom_b0(config, err)) return kExitUsage;
  if (config.loops) {
    const ExtendedExchangeMatrix start = framed(straight_a(config.n));
    for (const LoopRecord& rec : enumerate_loops(start, config.max_depth, config.workers)) {
      out << to_json(rec).dump() << '\n';
    }
    return kExitOk;
  }
  for (const MgsRecord& rec : enumerate_mgs(config.n, {std::nullopt, config.workers})) {
    out << to_json(rec).dump() << '\n';
  }
  return kExitOk;
}

int cmd_export_dot(const RunConfig& config, std::ostream& out, std::ostream&) {
  constexpr std::size_t kMaxNodes = 200'000;
  const ExchangeGraph graph = config.b0_file ? build_exchange_graph_from(framed(initial_b0(config)), kMaxNodes)
                                             : build_exchange_graph(config.n);
  out << exchange_graph_dot(graph);
  return kExitOk;
}

int cmd_check_standard(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.matrix.empty()) {
    err << "error: check-standard needs --matrix\n";
    return kExitUsage;
  }
  const IntMatrix m = matrix_from_json(Json::parse(config.matrix));
  if (m.rows() != m.cols()) {
    err << "error: matrix must be square\n";
    return kExitUsage;
  }
  const bool standard = is_standard(m);
  const auto factored = standard ? std::nullopt : factor_standard(m);
  if (config.format == Format::Json) {
    Json doc{{"standard", standard}, {"factorization", nullptr}};
    if (factored) doc["factorization"] = {{"rho", factored->rho.cycles()}, {"m", matrix_to_json(factored->m)}};
    out << doc.dump() << '\n';
    return kExitOk;
  }
  if (standard) {
    out << "standard\n";
  } else if (factored) {
    out << "not standard; factors as " << factored->rho.cycles() << "\xc2\xb7M with M =\n" << format_matrix(factored->m);
  } else {
    out << "not standard; no row permutation of it is standard\n";
  }
  return kExitOk;
}

int cmd_walk(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (refuse_custom_b0(config, err)) return kExitUsage;
  std::mt19937_64 rng(config.seed);
  std::uniform_int_distribution<int> pick(1, config.n);
  const ExtendedExchangeMatrix start = framed(straight_a(config.n));
  TrackedState tracked = TrackedState::start(start);
  MutationSequence walked;
  bool consistent = true;
  for (int t = 1; t <= config.max_depth; ++t) {
    const int k = pick(rng);
    const auto root = vector_to_signed_root(tracked.state.c().row(k - 1).transpose());
    tracked = step_at(tracked, k);
    walked.steps.push_back(k);
    const auto f = factor_standard(tracked.state.c());
    const bool agrees = f && f->rho == tracked.sigma;
    consistent = consistent && agrees;
    out << "step " << t << ": mutate " << k << " via " << to_string(SignedGenerator{root->root, root->sign})
        << "  sigma " << tracked.sigma.cycles() << (agrees ? "" : "  INCONSISTENT") << '\n';
  }
  const FormulaReport report = verify(start, walked, selected_formula(config));
  out << "sequence " << to_string(walked) << "  formula " << report.formula_perm.cycles() << "  verdict "
      << to_string(report.verdict) << '\n';
  if (report.verdict == Verdict::Mismatch) consistent = false;
  return consistent ? kExitOk : kExitFailed;
}

int run_command(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.n < 1) throw std::invalid_argument("--n must be at least 1");
    if (config.max_depth < 0) throw std::invalid_argument("--max-depth must be nonnegative");
    if (config.command == "mutate") return cmd_mutate(config, out, err);
    if (config.command == "verify") return cmd_verify(config, out, err);
    if (config.command == "census") return cmd_census(config, out, err);
    if (config.command == "enumerate") return cmd_enumerate(config, out, err);
    if (config.command == "export-dot") return cmd_export_dot(config, out, err);
    if (config.command == "check-standard") return cmd_check_standard(config, out, err);
    if (config.command == "walk") return cmd_walk(config, out, err);
    err << "error: unknown command " << config.command << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitUsage;
}

}  // namespace quiver::cli
