#pragma once

// Exchange matrices, extended exchange matrices [B | C] and their mutation.
//
// Vertices are 1-based throughout the public interface. Frozen vertices are
// never materialized: vertex i' is column i of the c-matrix.

#include <Eigen/Core>

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "quiver/permutation.hpp"

namespace quiver {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<int>;
using IntVector = Vector<int>;

class QuiverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class VertexColor { Green, Red };

/// Mutation steps applied left to right: steps[0] is mutated first.
struct MutationSequence {
  std::vector<int> steps;

  std::size_t size() const { return steps.size(); }
  bool empty() const { return steps.empty(); }
  friend bool operator==(const MutationSequence&, const MutationSequence&) = default;
  friend auto operator<=>(const MutationSequence&, const MutationSequence&) = default;
};

std::string to_string(const MutationSequence& s);

template <typename Derived>
bool is_skew_symmetric(const Eigen::MatrixBase<Derived>& b) {
  return b.rows() == b.cols() && b == -b.transpose();
}

template <typename Scalar>
Scalar sign_of(Scalar x) {
  return static_cast<Scalar>((Scalar(0) < x) - (x < Scalar(0)));
}

/// Matrix mutation at 1-based row k of an n x m matrix whose left n x n
/// block is the (skew-symmetric) exchange part. Columns beyond n are frozen.
template <typename Derived>
Matrix<typename Derived::Scalar> mutate_matrix(const Eigen::MatrixBase<Derived>& tilde, int k) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index n = tilde.rows();
  if (k < 1 || k > n) throw std::out_of_range("mutation vertex " + std::to_string(k) + " outside 1.." + std::to_string(n));
  const Eigen::Index kk = k - 1;
  Matrix<Scalar> out = tilde;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < tilde.cols(); ++j) {
      if (i == kk || j == kk) {
        out(i, j) = -tilde(i, j);
      } else {
        const Scalar b_ik = tilde(i, kk);
        const Scalar b_kj = tilde(kk, j);
        const Scalar product = b_ik * b_kj;
        if (product > Scalar(0)) out(i, j) = tilde(i, j) + sign_of(b_ik) * product;
      }
    }
  }
  return out;
}

/// A skew-symmetric n x n exchange matrix.
template <typename Scalar>
class BasicExchangeMatrix {
 public:
  explicit BasicExchangeMatrix(Matrix<Scalar> b) : b_(std::move(b)) {
    if (b_.rows() < 1) throw std::invalid_argument("exchange matrix needs at least one vertex");
    if (!is_skew_symmetric(b_)) throw std::invalid_argument("exchange matrix must be square and skew-symmetric");
  }

  int n() const { return static_cast<int>(b_.rows()); }
  const Matrix<Scalar>& matrix() const { return b_; }

  friend bool operator==(const BasicExchangeMatrix& a, const BasicExchangeMatrix& b) {
    return a.b_.rows() == b.b_.rows() && a.b_ == b.b_;
  }

 private:
  Matrix<Scalar> b_;
};

/// The extended exchange matrix [B | C]; rows of C are the c-vectors.
template <typename Scalar>
class BasicExtendedExchangeMatrix {
 public:
  BasicExtendedExchangeMatrix(Matrix<Scalar> b, Matrix<Scalar> c) : b_(std::move(b)), c_(std::move(c)) {
    if (b_.rows() < 1 || b_.rows() != b_.cols()) throw std::invalid_argument("b must be square and nonempty");
    if (c_.rows() != b_.rows() || c_.cols() != b_.rows()) throw std::invalid_argument("c must be n x n");
    if (!is_skew_symmetric(b_)) throw std::invalid_argument("b must be skew-symmetric");
    for (Eigen::Index i = 0; i < c_.rows(); ++i) {
      if (c_.row(i).isZero()) throw std::invalid_argument("c-vectors must be nonzero");
    }
  }

  int n() const { return static_cast<int>(b_.rows()); }
  const Matrix<Scalar>& b() const { return b_; }
  const Matrix<Scalar>& c() const { return c_; }
  BasicExchangeMatrix<Scalar> exchange() const { return BasicExchangeMatrix<Scalar>(b_); }

  /// The full n x 2n matrix [B | C].
  Matrix<Scalar> tilde() const {
    Matrix<Scalar> t(n(), 2 * n());
    t << b_, c_;
    return t;
  }

  static BasicExtendedExchangeMatrix from_tilde(const Matrix<Scalar>& t) {
    const Eigen::Index n = t.rows();
    if (t.cols() != 2 * n) throw std::invalid_argument("extended matrix must be n x 2n");
    return BasicExtendedExchangeMatrix(t.leftCols(n), t.rightCols(n));
  }

  friend bool operator==(const BasicExtendedExchangeMatrix& x, const BasicExtendedExchangeMatrix& y) {
    return x.n() == y.n() && x.b_ == y.b_ && x.c_ == y.c_;
  }

 private:
  Matrix<Scalar> b_;
  Matrix<Scalar> c_;
};

using ExchangeMatrix = BasicExchangeMatrix<int>;
using ExtendedExchangeMatrix = BasicExtendedExchangeMatrix<int>;

/// B0 for the straight orientation 1 -> 2 -> ... -> n.
template <typename Scalar = int>
BasicExchangeMatrix<Scalar> straight_a(int n) {
  if (n < 1) throw std::invalid_argument("A_n needs n >= 1");
  Matrix<Scalar> b = Matrix<Scalar>::Zero(n, n);
  for (int i = 0; i + 1 < n; ++i) {
    b(i, i + 1) = Scalar(1);
    b(i + 1, i) = Scalar(-1);
  }
  return BasicExchangeMatrix<Scalar>(std::move(b));
}

template <typename Scalar>
BasicExtendedExchangeMatrix<Scalar> framed(const BasicExchangeMatrix<Scalar>& b0) {
  return {b0.matrix(), Matrix<Scalar>::Identity(b0.n(), b0.n())};
}

template <typename Scalar>
BasicExtendedExchangeMatrix<Scalar> coframed(const BasicExchangeMatrix<Scalar>& b0) {
  return {b0.matrix(), -Matrix<Scalar>::Identity(b0.n(), b0.n())};
}

template <typename Scalar>
BasicExtendedExchangeMatrix<Scalar> mutate(const BasicExtendedExchangeMatrix<Scalar>& m, int k) {
  return BasicExtendedExchangeMatrix<Scalar>::from_tilde(mutate_matrix(m.tilde(), k));
}

template <typename Scalar>
BasicExtendedExchangeMatrix<Scalar> apply_sequence(BasicExtendedExchangeMatrix<Scalar> m, const MutationSequence& s) {
  for (int k : s.steps) m = mutate(m, k);
  return m;
}

template <typename Derived>
bool is_sign_coherent(const Eigen::MatrixBase<Derived>& row) {
  using Scalar = typename Derived::Scalar;
  return (row.array() >= Scalar(0)).all() || (row.array() <= Scalar(0)).all();
}

template <typename Scalar>
VertexColor vertex_color(const BasicExtendedExchangeMatrix<Scalar>& m, int k) {
  if (k < 1 || k > m.n()) throw std::out_of_range("vertex outside 1..n");
  const auto row = m.c().row(k - 1);
  if ((row.array() >= Scalar(0)).all()) return VertexColor::Green;
  if ((row.array() <= Scalar(0)).all()) return VertexColor::Red;
  throw QuiverError("c-vector " + std::to_string(k) + " is not sign-coherent");
}

template <typename Scalar>
bool is_all_red(const BasicExtendedExchangeMatrix<Scalar>& m) {
  for (int k = 1; k <= m.n(); ++k) {
    if (vertex_color(m, k) == VertexColor::Green) return false;
  }
  return true;
}

/// rho acting on the nonfrozen vertices: rows and columns of B, rows of C.
/// Row i of the result is row rho^{-1}(i) of the input.
template <typename Scalar>
BasicExtendedExchangeMatrix<Scalar> permute_rows(const BasicExtendedExchangeMatrix<Scalar>& m, const Permutation& rho) {
  const int n = m.n();
  if (rho.size() != n) throw std::invalid_argument("permutation degree does not match n");
  const Permutation inv = rho.inverse();
  Matrix<Scalar> b(n, n);
  Matrix<Scalar> c(n, n);
  for (int i = 0; i < n; ++i) {
    const int src = inv(i + 1) - 1;
    c.row(i) = m.c().row(src);
    for (int j = 0; j < n; ++j) b(i, j) = m.b()(src, inv(j + 1) - 1);
  }
  return {std::move(b), std::move(c)};
}

/// Row i of the result is row rho^{-1}(i) of the input.
template <typename Derived>
Matrix<typename Derived::Scalar> permute_matrix_rows(const Eigen::MatrixBase<Derived>& m, const Permutation& rho) {
  if (rho.size() != m.rows()) throw std::invalid_argument("permutation degree does not match row count");
  Matrix<typename Derived::Scalar> out(m.rows(), m.cols());
  for (int i = 0; i < rho.size(); ++i) out.row(rho(i + 1) - 1) = m.row(i);
  return out;
}

/// The unique rho with permute_rows(from, rho) == to, if any.
template <typename Scalar>
std::optional<Permutation> find_row_permutation(const BasicExtendedExchangeMatrix<Scalar>& from,
                                                const BasicExtendedExchangeMatrix<Scalar>& to) {
  const int n = from.n();
  if (to.n() != n) throw std::invalid_argument("states have different sizes");
  for (int r = 0; r < n; ++r) {
    for (int s = r + 1; s < n; ++s) {
      if (from.c().row(r) == from.c().row(s)) throw QuiverError("duplicate c-vectors: row permutation is ambiguous");
    }
  }
  std::vector<int> images(n, 0);
  std::vector<bool> used(n, false);
  for (int i = 0; i < n; ++i) {
    int match = -1;
    for (int r = 0; r < n; ++r) {
      if (!used[r] && from.c().row(r) == to.c().row(i)) {
        match = r;
        break;
      }
    }
    if (match < 0) return std::nullopt;
    used[match] = true;
    images[match] = i + 1;
  }
  Permutation rho(std::move(images));
  if (!(permute_rows(from, rho) == to)) return std::nullopt;
  return rho;
}

/// Flattened c-matrix, row-major; the key for memoized searches.
template <typename Scalar>
std::vector<Scalar> state_key(const BasicExtendedExchangeMatrix<Scalar>& m) {
  std::vector<Scalar> key;
  key.reserve(static_cast<std::size_t>(m.n()) * m.n());
  for (int i = 0; i < m.n(); ++i)
    for (int j = 0; j < m.n(); ++j) key.push_back(m.c()(i, j));
  return key;
}

struct StateKeyHash {
  std::size_t operator()(const std::vector<int>& key) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int v : key) {
      h ^= static_cast<std::size_t>(v + 0x9e3779b9);
      h *= 1099511628211ull;
    }
    return h;
  }
};

/// B = C B0 C^t, the exchange matrix determined by a c-matrix.
template <typename Scalar>
Matrix<Scalar> reconstruct_b(const Matrix<Scalar>& c, const BasicExchangeMatrix<Scalar>& b0) {
  return c * b0.matrix() * c.transpose();
}

}  // namespace quiver
