#include "quiver/standard.hpp"

#include <stdexcept>

namespace quiver {

bool is_standard(const IntMatrix& m) {
  if (m.rows() != m.cols()) return false;
  const Eigen::Index n = m.rows();
  for (Eigen::Index r = 0; r < n; ++r) {
    if (m(r, r) == 0) return false;
    for (Eigen::Index col = 0; col < n; ++col) {
      if (m(r, col) > 0 && col < r) return false;
      if (m(r, col) < 0 && col > r) return false;
    }
    if (!vector_to_signed_root(m.row(r).transpose())) return false;
  }
  return true;
}

int canonical_row(const SignedRoot& r) { return r.sign > 0 ? r.root.i + 1 : r.root.j; }

std::optional<StandardFactorization> factor_standard(const IntMatrix& c) {
  if (c.rows() != c.cols() || c.rows() < 1) return std::nullopt;
  const int n = static_cast<int>(c.rows());
  std::vector<int> images(n, 0);
  std::vector<bool> taken(n, false);
  IntMatrix m(n, n);
  for (int r = 0; r < n; ++r) {
    const auto root = vector_to_signed_root(c.row(r).transpose());
    if (!root) return std::nullopt;
    const int target = canonical_row(*root);
    if (taken[target - 1]) return std::nullopt;
    taken[target - 1] = true;
    images[target - 1] = r + 1;
    m.row(target - 1) = c.row(r);
  }
  if (!is_standard(m)) return std::nullopt;
  return StandardFactorization{Permutation(std::move(images)), std::move(m)};
}

PreservationStep preservation_step(const ExtendedExchangeMatrix& state, const SignedGenerator& g) {
  if (!is_standard(state.c())) throw std::invalid_argument("preservation step needs a standard c-matrix");
  const ExtendedExchangeMatrix acted = act(state, g);
  const Permutation swap = Permutation::transposition(state.n(), g.root.i + 1, g.root.j);
  PreservationStep step{g, state.c(), acted.c(), permute_matrix_rows(acted.c(), swap), false};
  step.after_is_standard = is_standard(step.after);
  return step;
}

bool check_preservation(const ExtendedExchangeMatrix& state, const SignedGenerator& g) {
  return preservation_step(state, g).after_is_standard;
}

}  // namespace quiver
