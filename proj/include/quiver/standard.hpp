#pragma once

// Standard matrices: the canonical row order on the c-vectors of straight A_n.
//
// A square integer matrix is standard when its diagonal is nonzero, its
// positive entries lie on or above the diagonal, its negative entries on or
// below, and every row is a signed root. Those axioms pin each signed root to
// one row: +beta(i, j) to row i + 1 and -beta(i, j) to row j.

#include <optional>
#include <vector>

#include "quiver/permutation.hpp"
#include "quiver/picture_group.hpp"
#include "quiver/quiver_core.hpp"
#include "quiver/roots.hpp"

namespace quiver {

/// c == permute_matrix_rows(m, rho) with m standard.
struct StandardFactorization {
  Permutation rho;
  IntMatrix m;
};

bool is_standard(const IntMatrix& m);

/// The only row a signed root can occupy in a standard matrix (1-based).
int canonical_row(const SignedRoot& r);

/// Unique (rho, M) with M standard and c = rho(M); empty when no such pair.
std::optional<StandardFactorization> factor_standard(const IntMatrix& c);

/// One step of the standardness-preservation lemma: act with g, then
/// transpose rows i + 1 and j.
struct PreservationStep {
  SignedGenerator generator;
  IntMatrix before;        // standard c-matrix
  IntMatrix mutated;       // c-matrix after the mutation, before transposing
  IntMatrix after;         // after the transposition
  bool after_is_standard = false;
};

/// Requires is_standard(state.c()) and g allowed on state; throws otherwise.
PreservationStep preservation_step(const ExtendedExchangeMatrix& state, const SignedGenerator& g);

/// preservation_step(state, g).after_is_standard.
bool check_preservation(const ExtendedExchangeMatrix& state, const SignedGenerator& g);

}  // namespace quiver
