#include "quiver/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace quiver {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = size();
  std::vector<bool> seen(images_.size(), false);
  for (int image : images_) {
    if (image < 1 || image > n || seen[image - 1]) {
      throw std::invalid_argument("permutation images must be a bijection of 1..n");
    }
    seen[image - 1] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

Permutation Permutation::transposition(int n, int a, int b) {
  if (a < 1 || a > n || b < 1 || b > n) {
    throw std::out_of_range("transposition point outside 1..n");
  }
  Permutation p = identity(n);
  std::swap(p.images_[a - 1], p.images_[b - 1]);
  return p;
}

int Permutation::operator()(int x) const {
  if (x < 1 || x > size()) {
    throw std::out_of_range("permutation argument outside 1..n");
  }
  return images_[x - 1];
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int x = 1; x <= size(); ++x) {
    inv[images_[x - 1] - 1] = x;
  }
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
  for (int x = 1; x <= size(); ++x) {
    if (images_[x - 1] != x) return false;
  }
  return true;
}

std::string Permutation::cycles() const {
  std::ostringstream out;
  std::vector<bool> done(images_.size(), false);
  for (int start = 1; start <= size(); ++start) {
    if (done[start - 1] || images_[start - 1] == start) continue;
    out << '(';
    int x = start;
    bool first = true;
    while (!done[x - 1]) {
      done[x - 1] = true;
      if (!first) out << ' ';
      out << x;
      first = false;
      x = images_[x - 1];
    }
    out << ')';
  }
  std::string text = out.str();
  return text.empty() ? "id" : text;
}

Permutation operator*(const Permutation& lhs, const Permutation& rhs) {
  if (lhs.size() != rhs.size()) {
    throw std::invalid_argument("cannot compose permutations of different degree");
  }
  std::vector<int> images(rhs.images_.size());
  for (int x = 1; x <= rhs.size(); ++x) {
    images[x - 1] = lhs.images_[rhs.images_[x - 1] - 1];
  }
  return Permutation(std::move(images));
}

Permutation parse_cycles(int n, const std::string& text) {
  Permutation result = Permutation::identity(n);
  if (text == "id" || text.empty()) return result;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] == ' ') {
      ++pos;
      continue;
    }
    if (text[pos] != '(') throw std::invalid_argument("malformed cycle notation: " + text);
    const std::size_t close = text.find(')', pos);
    if (close == std::string::npos) throw std::invalid_argument("unterminated cycle: " + text);
    std::istringstream body(text.substr(pos + 1, close - pos - 1));
    std::vector<int> cycle;
    for (int x; body >> x;) cycle.push_back(x);
    // A cycle (a1 a2 ... ak) composed on the left of the running product.
    std::vector<int> images = Permutation::identity(n).images();
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      const int from = cycle[k];
      if (from < 1 || from > n) throw std::out_of_range("cycle point outside 1..n");
      images[from - 1] = cycle[(k + 1) % cycle.size()];
    }
    result = Permutation(std::move(images)) * result;
    pos = close + 1;
  }
  return result;
}

void for_each_permutation(int n, const std::function<void(const Permutation&)>& visit) {
  std::vector<int> images = Permutation::identity(n).images();
  do {
    visit(Permutation(images));
  } while (std::next_permutation(images.begin(), images.end()));
}

}  // namespace quiver
