#include "quiver/formula.hpp"

namespace quiver {

Permutation transposition_of(const SignedGenerator& g, int n) {
  return Permutation::transposition(n, g.root.i + 1, g.root.j);
}

Permutation formula_permutation(const PictureWord& w, const Permutation& sigma) {
  const int n = sigma.size();
  Permutation product = Permutation::identity(n);
  for (const SignedGenerator& g : w.factors) product = product * transposition_of(g, n);
  return sigma * product * sigma.inverse();
}

bool is_straight_a_state(const ExtendedExchangeMatrix& m) {
  for (int r = 0; r < m.n(); ++r) {
    if (!vector_to_signed_root(m.c().row(r).transpose())) return false;
  }
  return m.b() == reconstruct_b(m.c(), straight_a(m.n()));
}

void require_straight_a(const ExtendedExchangeMatrix& m) {
  if (!is_straight_a_state(m)) {
    throw QuiverError("state is not a c-matrix state of straight A_" + std::to_string(m.n()));
  }
}

TrackedState TrackedState::start(const ExtendedExchangeMatrix& m) {
  const auto f = factor_standard(m.c());
  if (!f) throw QuiverError("c-matrix has no standard factorization");
  return {m, f->rho};
}

TrackedState step(const TrackedState& t, const SignedGenerator& g) {
  return {act(t.state, g), t.sigma * transposition_of(g, t.state.n())};
}

TrackedState step_at(const TrackedState& t, int k) {
  if (k < 1 || k > t.state.n()) throw std::out_of_range("mutation vertex outside 1..n");
  const auto root = vector_to_signed_root(t.state.c().row(k - 1).transpose());
  if (!root) throw QuiverError("c-vector at vertex " + std::to_string(k) + " is not a signed root");
  return step(t, SignedGenerator{root->root, root->sign});
}

bool is_reddening(const ExtendedExchangeMatrix& b0, const MutationSequence& s) {
  return is_all_red(apply_sequence(b0, s));
}

std::optional<Permutation> is_loop(const ExtendedExchangeMatrix& m, const MutationSequence& s) {
  return find_row_permutation(m, apply_sequence(m, s));
}

Permutation observed_reddening_permutation(const ExtendedExchangeMatrix& b0, const MutationSequence& s) {
  const ExtendedExchangeMatrix final_state = apply_sequence(b0, s);
  if (!is_all_red(final_state)) throw QuiverError("sequence " + to_string(s) + " is not reddening");
  const auto rho = find_row_permutation(coframed(b0.exchange()), final_state);
  if (!rho) throw QuiverError("reddening endpoint is not a relabeled coframed quiver");
  return *rho;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Match: return "Match";
    case Verdict::Mismatch: return "Mismatch";
    case Verdict::NotApplicable: return "NotApplicable";
  }
  return "?";
}

std::string to_string(ObservationKind k) {
  switch (k) {
    case ObservationKind::None: return "none";
    case ObservationKind::Loop: return "loop";
    case ObservationKind::Reddening: return "reddening";
  }
  return "?";
}

FormulaReport verify(const ExtendedExchangeMatrix& m, const MutationSequence& s) {
  return verify(m, s, formula_permutation);
}

FormulaReport verify(const ExtendedExchangeMatrix& m, const MutationSequence& s, const FormulaFn& formula) {
  require_straight_a(m);
  const TrackedState start = TrackedState::start(m);
  FormulaReport report{s, word_from_sequence(m, s), start.sigma, start.sigma, std::nullopt};
  report.formula_perm = formula(report.word, start.sigma);

  const ExtendedExchangeMatrix final_state = apply_sequence(m, s);
  if (auto rho = find_row_permutation(m, final_state)) {
    report.observed_perm = std::move(rho);
    report.observed_kind = ObservationKind::Loop;
  } else if (m.c() == IntMatrix::Identity(m.n(), m.n()) && is_all_red(final_state)) {
    report.observed_perm = observed_reddening_permutation(m, s);
    report.observed_kind = ObservationKind::Reddening;
  }
  if (report.observed_perm) {
    report.verdict = *report.observed_perm == report.formula_perm ? Verdict::Match : Verdict::Mismatch;
  }
  return report;
}

}  // namespace quiver
