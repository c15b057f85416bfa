#include "quiver/io.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace quiver {

Json matrix_to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

IntMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix must be a nonempty array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = static_cast<Eigen::Index>(j.at(0).size());
  IntMatrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const Json& row = j.at(r);
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
      throw std::invalid_argument("matrix rows must have equal length");
    }
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = row.at(c).get<int>();
  }
  return m;
}

Json to_json(const ExtendedExchangeMatrix& m) {
  return Json{{"n", m.n()}, {"b", matrix_to_json(m.b())}, {"c", matrix_to_json(m.c())}};
}

ExtendedExchangeMatrix state_from_json(const Json& j) {
  const int n = j.at("n").get<int>();
  IntMatrix b = matrix_from_json(j.at("b"));
  IntMatrix c = matrix_from_json(j.at("c"));
  if (b.rows() != n || c.rows() != n) throw std::invalid_argument("matrix sizes do not match n");
  return {std::move(b), std::move(c)};
}

Json to_json(const MutationSequence& s) { return Json(s.steps); }

MutationSequence sequence_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("mutation sequence must be a JSON array");
  return MutationSequence{j.get<std::vector<int>>()};
}

MutationSequence parse_sequence(const std::string& text) {
  std::string cleaned = text;
  std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
  std::istringstream in(cleaned);
  MutationSequence s;
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("not a vertex index: " + token);
    }
    if (used != token.size()) throw std::invalid_argument("not a vertex index: " + token);
    s.steps.push_back(value);
  }
  return s;
}

Json to_json(const SignedRoot& r) { return Json{{"sign", r.sign}, {"i", r.root.i}, {"j", r.root.j}}; }

SignedRoot signed_root_from_json(const Json& j) {
  const int sign = j.at("sign").get<int>();
  if (sign != 1 && sign != -1) throw std::invalid_argument("root sign must be +1 or -1");
  return {sign, Root{j.at("i").get<int>(), j.at("j").get<int>()}};
}

Json to_json(const ValidationReport& r) {
  Json violations = Json::array();
  for (const RootViolation& v : r.violations) {
    violations.push_back({{"row_a", v.row_a}, {"row_b", v.row_b}, {"reason", v.reason}});
  }
  return Json{{"ok", r.ok}, {"violations", std::move(violations)}};
}

Json to_json(const SignedGenerator& g) {
  return Json{{"i", g.root.i}, {"j", g.root.j}, {"delta", g.delta > 0 ? "+" : "-"}};
}

SignedGenerator generator_from_json(const Json& j) {
  const std::string delta = j.at("delta").get<std::string>();
  if (delta != "+" && delta != "-") throw std::invalid_argument("delta must be \"+\" or \"-\"");
  return {Root{j.at("i").get<int>(), j.at("j").get<int>()}, delta == "+" ? 1 : -1};
}

Json word_factors_json(const PictureWord& w) {
  Json factors = Json::array();
  for (const SignedGenerator& g : w.factors) factors.push_back(to_json(g));
  return factors;
}

Json to_json(const PictureWord& w) { return Json{{"factors", word_factors_json(w)}, {"display", w.display()}}; }

PictureWord word_from_json(const Json& j) {
  const Json& factors = j.is_object() ? j.at("factors") : j;
  PictureWord w;
  for (const Json& g : factors) w.factors.push_back(generator_from_json(g));
  return w;
}

Json to_json(const FormulaReport& r) {
  return Json{{"sequence", to_json(r.sequence)},
              {"word", word_factors_json(r.word)},
              {"display", r.word.display()},
              {"sigma", r.sigma.cycles()},
              {"formula", r.formula_perm.cycles()},
              {"observed", r.observed_perm ? Json(r.observed_perm->cycles()) : Json(nullptr)},
              {"observed_kind", to_string(r.observed_kind)},
              {"verdict", to_string(r.verdict)}};
}

Json to_json(const MgsRecord& r) {
  return Json{{"vertices", to_json(r.sequence)},
              {"word", word_factors_json(r.word)},
              {"permutation", r.permutation.cycles()},
              {"length", r.sequence.size()}};
}

Json to_json(const LoopRecord& r) {
  return Json{{"vertices", to_json(r.sequence)}, {"permutation", r.rho.cycles()}, {"length", r.sequence.size()}};
}

Json to_json(const MgsCensus& c) {
  Json lengths = Json::object();
  for (const auto& [len, count] : c.lengths) lengths[std::to_string(len)] = count;
  Json perms = Json::object();
  for (const auto& [cycles, count] : c.permutations) perms[cycles] = count;
  return Json{{"n", c.n},
              {"count", c.count},
              {"lengths", std::move(lengths)},
              {"permutations", std::move(perms)},
              {"min_length", c.min_length},
              {"max_length", c.max_length}};
}

std::string ice_quiver_dot(const ExtendedExchangeMatrix& m) {
  const int n = m.n();
  std::ostringstream out;
  out << "digraph ice_quiver {\n";
  for (int v = 1; v <= n; ++v) out << "  \"" << v << "\";\n";
  for (int v = 1; v <= n; ++v) out << "  \"" << v << "'\" [shape=box];\n";
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const int entry = m.b()(i, j);
      const int from = entry > 0 ? i + 1 : j + 1;
      const int to = entry > 0 ? j + 1 : i + 1;
      for (int unit = 0; unit < std::abs(entry); ++unit) out << "  \"" << from << "\" -> \"" << to << "\";\n";
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int entry = m.c()(i, j);
      for (int unit = 0; unit < std::abs(entry); ++unit) {
        if (entry > 0) {
          out << "  \"" << i + 1 << "\" -> \"" << j + 1 << "'\";\n";
        } else {
          out << "  \"" << j + 1 << "'\" -> \"" << i + 1 << "\";\n";
        }
      }
    }
  }
  out << "}\n";
  return out.str();
}

namespace {

std::string c_matrix_label(const IntMatrix& c) {
  std::ostringstream out;
  for (Eigen::Index r = 0; r < c.rows(); ++r) {
    if (r) out << "\\n";
    for (Eigen::Index col = 0; col < c.cols(); ++col) {
      if (col) out << ' ';
      out << c(r, col);
    }
  }
  return out.str();
}

}  // namespace

std::string exchange_graph_dot(const ExchangeGraph& g) {
  std::ostringstream out;
  out << "graph exchange_graph {\n  node [shape=box, fontname=monospace];\n";
  for (std::size_t v = 0; v < g.nodes.size(); ++v) {
    out << "  s" << v << " [label=\"" << c_matrix_label(g.nodes[v].c()) << "\"];\n";
  }
  for (std::size_t v = 0; v < g.nodes.size(); ++v) {
    for (std::size_t k = 0; k < g.edges[v].size(); ++k) {
      const int w = g.edges[v][k];
      if (static_cast<int>(v) < w) out << "  s" << v << " -- s" << w << " [label=\"" << k + 1 << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

namespace {

int field_width(const IntMatrix& m) {
  int width = 1;
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      width = std::max(width, static_cast<int>(std::to_string(m(r, c)).size()));
  return width;
}

void write_row(std::ostringstream& out, const IntMatrix& m, Eigen::Index r, int width) {
  for (Eigen::Index c = 0; c < m.cols(); ++c) {
    const std::string cell = std::to_string(m(r, c));
    out << std::string(width + 1 - cell.size(), ' ') << cell;
  }
}

}  // namespace

std::string format_matrix(const IntMatrix& m) {
  const int width = field_width(m);
  std::ostringstream out;
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    write_row(out, m, r, width);
    out << '\n';
  }
  return out.str();
}

std::string format_state(const ExtendedExchangeMatrix& m) {
  const int width = std::max(field_width(m.b()), field_width(m.c()));
  std::ostringstream out;
  for (Eigen::Index r = 0; r < m.n(); ++r) {
    write_row(out, m.b(), r, width);
    out << " |";
    write_row(out, m.c(), r, width);
    out << '\n';
  }
  return out.str();
}

}  // namespace quiver
