#pragma once

// Positive roots of straight A_n (1 -> 2 -> ... -> n) and the homological
// data of their interval modules.
//
// beta(i, j) = e_{i+1} + ... + e_j for 0 <= i < j <= n is the dimension
// vector of the interval module supported on vertices i+1..j.

#include <boost/rational.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quiver/quiver_core.hpp"

namespace quiver {

using Rational = boost::rational<std::int64_t>;

struct Root {
  int i = 0;
  int j = 1;

  /// Number of vertices in the support.
  int length() const { return j - i; }
  bool is_simple() const { return j == i + 1; }
  friend bool operator==(const Root&, const Root&) = default;
  friend auto operator<=>(const Root&, const Root&) = default;
};

struct SignedRoot {
  int sign = 1;
  Root root;

  friend bool operator==(const SignedRoot&, const SignedRoot&) = default;
  friend auto operator<=>(const SignedRoot&, const SignedRoot&) = default;
};

/// Throws std::out_of_range unless 0 <= i < j <= n.
void check_root(const Root& r, int n);

/// All roots of A_n ordered by (i, j).
std::vector<Root> positive_roots(int n);

IntVector root_to_vector(const Root& r, int n);
IntVector signed_root_to_vector(const SignedRoot& r, int n);

/// +-beta(i, j) if v or -v is a 0/1 vector with interval support.
std::optional<SignedRoot> vector_to_signed_root(const Eigen::Ref<const IntVector>& v);

std::string to_string(const Root& r);
std::string to_string(const SignedRoot& r);

/// E with E(i, j) = hom(e_i, e_j) - ext(e_i, e_j): 1 on the diagonal, -1 on
/// the superdiagonal.
IntMatrix euler_matrix(int n);

/// <x, y> = x^t E y.
int euler_pairing(const Eigen::Ref<const IntVector>& x, const Eigen::Ref<const IntVector>& y);
Rational euler_pairing(const std::vector<Rational>& x, const Eigen::Ref<const IntVector>& y);

/// dim Hom(M_a, M_b): 1 iff b.i <= a.i < b.j <= a.j.
int hom(const Root& a, const Root& b);

/// dim Ext(M_a, M_b) = hom(a, b) - <a, b>.
int ext(const Root& a, const Root& b);

/// Whether M_s is a submodule of M_b: the interval of s ends where b ends.
bool is_subroot(const Root& s, const Root& b);

/// Membership of x in the wall D(b): <x, b> = 0 and <x, s> <= 0 for every
/// subroot s of b.
bool in_wall(const std::vector<Rational>& x, const Root& b);

struct RootViolation {
  int row_a = 0;  // 1-based
  int row_b = 0;  // 1-based; 0 when the violation concerns a single row
  std::string reason;
};

struct ValidationReport {
  bool ok = true;
  std::vector<RootViolation> violations;
};

/// Checks the c-vector constraints for straight A_n: every row is a signed
/// root, same-sign rows are Hom-orthogonal, and for opposite signs
/// alpha, -beta we have hom(alpha, beta) = 0 = ext(alpha, beta).
ValidationReport validate_c_matrix(const IntMatrix& c);

}  // namespace quiver
