#pragma once

// The associated permutation of a mutation sequence in straight A_n.
//
// For a word whose factors x(i_1, j_1)^{+-}, ..., x(i_N, j_N)^{+-} act in that
// order on a c-matrix C = sigma(M), M standard, the permutation is
//
//   rho = sigma * t_1 * t_2 * ... * t_N * sigma^{-1},   t_k = (i_k + 1, j_k),
//
// with functional composition and the row action of Permutation. Read as a
// right-to-left product this is sigma (t_N ... t_1)^{-1} sigma^{-1}. The A_2
// witness: sequence (2, 1, 2) on the framed quiver reads x(1,2), x(0,2),
// x(0,1), so rho = id * (1 2) * id = (1 2), and the final state is the
// coframed quiver with rows 1 and 2 swapped.
//
// Along a path the running permutation updates as sigma <- sigma * t_k, which
// keeps sigma equal to factor_standard(C).rho at every step.

#include <functional>
#include <optional>
#include <string>

#include "quiver/permutation.hpp"
#include "quiver/picture_group.hpp"
#include "quiver/quiver_core.hpp"
#include "quiver/standard.hpp"

namespace quiver {

/// (i + 1, j) on {1..n}; identity for simple roots.
Permutation transposition_of(const SignedGenerator& g, int n);

Permutation formula_permutation(const PictureWord& w, const Permutation& sigma);

/// Throws QuiverError unless m is a state of straight A_n: every c-vector a
/// signed root and B = C B0 C^t for the straight B0.
void require_straight_a(const ExtendedExchangeMatrix& m);
bool is_straight_a_state(const ExtendedExchangeMatrix& m);

struct TrackedState {
  ExtendedExchangeMatrix state;
  Permutation sigma;

  /// sigma from factor_standard; throws if the c-matrix does not factor.
  static TrackedState start(const ExtendedExchangeMatrix& m);
};

TrackedState step(const TrackedState& t, const SignedGenerator& g);
/// step with the generator read off vertex k.
TrackedState step_at(const TrackedState& t, int k);

/// Assumes b0 is a framed quiver.
bool is_reddening(const ExtendedExchangeMatrix& b0, const MutationSequence& s);

/// The observed rho with apply_sequence(m, s) == permute_rows(m, rho).
std::optional<Permutation> is_loop(const ExtendedExchangeMatrix& m, const MutationSequence& s);

/// rho with apply_sequence(b0, s) == permute_rows(coframed, rho); throws
/// QuiverError when s is not reddening.
Permutation observed_reddening_permutation(const ExtendedExchangeMatrix& b0, const MutationSequence& s);

enum class Verdict { Match, Mismatch, NotApplicable };
enum class ObservationKind { None, Loop, Reddening };

std::string to_string(Verdict v);
std::string to_string(ObservationKind k);

struct FormulaReport {
  MutationSequence sequence;
  PictureWord word;
  Permutation sigma;
  Permutation formula_perm;
  std::optional<Permutation> observed_perm;
  ObservationKind observed_kind = ObservationKind::None;
  Verdict verdict = Verdict::NotApplicable;
};

/// Formula evaluator signature, so harnesses can substitute a deliberately
/// broken variant as a negative control.
using FormulaFn = std::function<Permutation(const PictureWord&, const Permutation&)>;

/// Formula against observation. The observation is the loop permutation when
/// s returns to a relabeling of m, otherwise the reddening permutation when m
/// is framed and s reddening; without either the verdict is NotApplicable.
FormulaReport verify(const ExtendedExchangeMatrix& m, const MutationSequence& s);
FormulaReport verify(const ExtendedExchangeMatrix& m, const MutationSequence& s, const FormulaFn& formula);

}  // namespace quiver
