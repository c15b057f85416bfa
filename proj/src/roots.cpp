#include "quiver/roots.hpp"

#include <algorithm>
#include <stdexcept>

namespace quiver {

void check_root(const Root& r, int n) {
  if (r.i < 0 || r.i >= r.j || r.j > n) {
    throw std::out_of_range("root " + to_string(r) + " outside A_" + std::to_string(n));
  }
}

std::vector<Root> positive_roots(int n) {
  std::vector<Root> roots;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j <= n; ++j) roots.push_back({i, j});
  return roots;
}

IntVector root_to_vector(const Root& r, int n) {
  check_root(r, n);
  IntVector v = IntVector::Zero(n);
  v.segment(r.i, r.j - r.i).setOnes();
  return v;
}

IntVector signed_root_to_vector(const SignedRoot& r, int n) { return r.sign * root_to_vector(r.root, n); }

std::optional<SignedRoot> vector_to_signed_root(const Eigen::Ref<const IntVector>& v) {
  const Eigen::Index n = v.size();
  Eigen::Index first = 0;
  while (first < n && v(first) == 0) ++first;
  if (first == n) return std::nullopt;
  const int sign = v(first) > 0 ? 1 : -1;
  Eigen::Index last = first;
  while (last < n && v(last) == sign) ++last;
  for (Eigen::Index k = last; k < n; ++k) {
    if (v(k) != 0) return std::nullopt;
  }
  return SignedRoot{sign, Root{static_cast<int>(first), static_cast<int>(last)}};
}

std::string to_string(const Root& r) {
  return "beta(" + std::to_string(r.i) + "," + std::to_string(r.j) + ")";
}

std::string to_string(const SignedRoot& r) { return (r.sign > 0 ? "+" : "-") + to_string(r.root); }

IntMatrix euler_matrix(int n) {
  IntMatrix e = IntMatrix::Identity(n, n);
  for (int i = 0; i + 1 < n; ++i) e(i, i + 1) = -1;
  return e;
}

int euler_pairing(const Eigen::Ref<const IntVector>& x, const Eigen::Ref<const IntVector>& y) {
  if (x.size() != y.size()) throw std::invalid_argument("euler pairing of vectors with different dimension");
  return x.dot(euler_matrix(static_cast<int>(x.size())) * y);
}

Rational euler_pairing(const std::vector<Rational>& x, const Eigen::Ref<const IntVector>& y) {
  if (static_cast<Eigen::Index>(x.size()) != y.size()) {
    throw std::invalid_argument("euler pairing of vectors with different dimension");
  }
  const IntVector ey = euler_matrix(static_cast<int>(y.size())) * y;
  Rational sum = 0;
  for (std::size_t k = 0; k < x.size(); ++k) sum += x[k] * Rational(ey(static_cast<Eigen::Index>(k)));
  return sum;
}

int hom(const Root& a, const Root& b) { return (b.i <= a.i && a.i < b.j && b.j <= a.j) ? 1 : 0; }

int ext(const Root& a, const Root& b) {
  const int n = std::max(a.j, b.j);
  const int value = hom(a, b) - euler_pairing(root_to_vector(a, n), root_to_vector(b, n));
  if (value < 0 || value > 1) {
    throw std::logic_error("ext(" + to_string(a) + ", " + to_string(b) + ") = " + std::to_string(value));
  }
  return value;
}

bool is_subroot(const Root& s, const Root& b) { return b.i <= s.i && s.i < s.j && s.j == b.j; }

bool in_wall(const std::vector<Rational>& x, const Root& b) {
  const int n = static_cast<int>(x.size());
  check_root(b, n);
  if (euler_pairing(x, root_to_vector(b, n)) != Rational(0)) return false;
  for (int k = b.i; k < b.j; ++k) {
    const Root sub{k, b.j};
    if (euler_pairing(x, root_to_vector(sub, n)) > Rational(0)) return false;
  }
  return true;
}

ValidationReport validate_c_matrix(const IntMatrix& c) {
  ValidationReport report;
  const int n = static_cast<int>(c.rows());
  std::vector<std::optional<SignedRoot>> rows(n);
  for (int r = 0; r < n; ++r) {
    rows[r] = vector_to_signed_root(c.row(r).transpose());
    if (!rows[r]) report.violations.push_back({r + 1, 0, "row is not a signed root"});
  }
  for (int r = 0; r < n; ++r) {
    for (int s = r + 1; s < n; ++s) {
      if (!rows[r] || !rows[s]) continue;
      const SignedRoot& x = *rows[r];
      const SignedRoot& y = *rows[s];
      if (x.sign == y.sign) {
        if (hom(x.root, y.root) != 0 || hom(y.root, x.root) != 0) {
          report.violations.push_back({r + 1, s + 1, "same-sign roots " + to_string(x) + ", " + to_string(y) +
                                                         " are not Hom-orthogonal"});
        }
      } else {
        const Root& pos = x.sign > 0 ? x.root : y.root;
        const Root& neg = x.sign > 0 ? y.root : x.root;
        if (hom(pos, neg) != 0 || ext(pos, neg) != 0) {
          report.violations.push_back({r + 1, s + 1, "opposite-sign pair " + to_string(pos) + ", -" +
                                                         to_string(neg) + " has nonzero hom or ext"});
        }
      }
    }
  }
  report.ok = report.violations.empty();
  return report;
}

}  // namespace quiver
