#include "quiver/picture_group.hpp"

#include <sstream>

namespace quiver {

std::string to_string(const SignedGenerator& g) {
  std::string text = "x(" + std::to_string(g.root.i) + "," + std::to_string(g.root.j) + ")";
  return g.delta > 0 ? text : text + "^-1";
}

std::string PictureWord::display() const {
  if (factors.empty()) return "1";
  std::string text;
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
    if (!text.empty()) text += ' ';
    text += to_string(*it);
  }
  return text;
}

std::optional<int> allowed(const ExtendedExchangeMatrix& m, const SignedGenerator& g) {
  if (g.root.j > m.n()) return std::nullopt;
  const IntVector target = signed_root_to_vector(g.c_vector(), m.n());
  std::optional<int> found;
  for (int k = 0; k < m.n(); ++k) {
    if (m.c().row(k) == target.transpose()) {
      if (found) throw QuiverError("c-vector " + to_string(g.c_vector()) + " occurs twice");
      found = k + 1;
    }
  }
  return found;
}

ExtendedExchangeMatrix act(const ExtendedExchangeMatrix& m, const SignedGenerator& g) {
  const auto k = allowed(m, g);
  if (!k) throw QuiverError(to_string(g) + " is undefined on this state");
  return mutate(m, *k);
}

WordNotApplicable::WordNotApplicable(std::size_t index, const SignedGenerator& g)
    : QuiverError("factor " + std::to_string(index) + " (" + to_string(g) + ") is undefined"), index_(index) {}

ExtendedExchangeMatrix act_word(ExtendedExchangeMatrix m, const PictureWord& w) {
  for (std::size_t idx = 0; idx < w.factors.size(); ++idx) {
    const auto k = allowed(m, w.factors[idx]);
    if (!k) throw WordNotApplicable(idx, w.factors[idx]);
    m = mutate(m, *k);
  }
  return m;
}

PictureWord word_from_sequence(ExtendedExchangeMatrix m, const MutationSequence& s) {
  PictureWord w;
  for (int k : s.steps) {
    if (k < 1 || k > m.n()) throw std::out_of_range("mutation vertex outside 1..n");
    const auto root = vector_to_signed_root(m.c().row(k - 1).transpose());
    if (!root) throw QuiverError("c-vector at vertex " + std::to_string(k) + " is not a signed root");
    w.factors.push_back({root->root, root->sign});
    m = mutate(m, k);
  }
  return w;
}

PictureWord coxeter(int n) {
  if (n < 1) throw std::invalid_argument("coxeter element needs n >= 1");
  PictureWord w;
  for (int k = 1; k <= n; ++k) w.factors.push_back(gen(k - 1, k));
  return w;
}

std::vector<Relation> relations(int n) {
  std::vector<Relation> out;
  const auto roots = positive_roots(n);
  for (std::size_t a = 0; a < roots.size(); ++a) {
    for (std::size_t b = a + 1; b < roots.size(); ++b) {
      const Root& x = roots[a];
      const Root& y = roots[b];
      if (x.j < y.i || y.j < x.i) {
        out.push_back({RelationKind::Commutation, PictureWord{{{x, 1}, {y, 1}}}, PictureWord{{{y, 1}, {x, 1}}}});
      }
    }
  }
  for (int i = 0; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int k = j + 1; k <= n; ++k) {
        // x_jk x_ij = x_ij x_ik x_jk, listed in application order.
        out.push_back({RelationKind::Hexagon, PictureWord{{gen(i, j), gen(j, k)}},
                       PictureWord{{gen(j, k), gen(i, k), gen(i, j)}}});
      }
    }
  }
  return out;
}

std::vector<Relation> nested_commutations(int n) {
  std::vector<Relation> out;
  for (const Root& outer : positive_roots(n)) {
    for (const Root& inner : positive_roots(n)) {
      if (outer.i < inner.i && inner.j < outer.j) {
        out.push_back({RelationKind::Commutation, PictureWord{{{outer, 1}, {inner, 1}}},
                       PictureWord{{{inner, 1}, {outer, 1}}}});
      }
    }
  }
  return out;
}

std::string to_string(RelationVerdict v) {
  switch (v) {
    case RelationVerdict::BothUndefined: return "BothUndefined";
    case RelationVerdict::OneUndefined: return "OneUndefined";
    case RelationVerdict::AgreeTrue: return "AgreeTrue";
    case RelationVerdict::Disagree: return "Disagree";
  }
  return "?";
}

namespace {

std::optional<ExtendedExchangeMatrix> try_act_word(const ExtendedExchangeMatrix& m, const PictureWord& w) {
  try {
    return act_word(m, w);
  } catch (const WordNotApplicable&) {
    return std::nullopt;
  }
}

}  // namespace

RelationVerdict relation_holds_on(const ExtendedExchangeMatrix& m, const Relation& rel) {
  const auto lhs = try_act_word(m, rel.lhs);
  const auto rhs = try_act_word(m, rel.rhs);
  if (!lhs && !rhs) return RelationVerdict::BothUndefined;
  if (!lhs || !rhs) return RelationVerdict::OneUndefined;
  return find_row_permutation(*lhs, *rhs) ? RelationVerdict::AgreeTrue : RelationVerdict::Disagree;
}

}  // namespace quiver
