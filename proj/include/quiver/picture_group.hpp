#pragma once

// Picture group generators for straight A_n and their action on extended
// exchange matrices.
//
// x_ij acts on a state whose c-matrix has a row equal to beta(i, j) by
// mutating at that row; x_ij^{-1} does the same for a row equal to
// -beta(i, j). Words are stored in application order: factors[0] acts first.
// Printed words read right to left, so factors[0] is rendered last.

#include <optional>
#include <string>
#include <vector>

#include "quiver/quiver_core.hpp"
#include "quiver/roots.hpp"

namespace quiver {

struct SignedGenerator {
  Root root;
  int delta = 1;  // +1 for x_ij, -1 for x_ij^{-1}

  SignedRoot c_vector() const { return {delta, root}; }
  friend bool operator==(const SignedGenerator&, const SignedGenerator&) = default;
  friend auto operator<=>(const SignedGenerator&, const SignedGenerator&) = default;
};

std::string to_string(const SignedGenerator& g);

struct PictureWord {
  std::vector<SignedGenerator> factors;

  std::size_t size() const { return factors.size(); }
  bool empty() const { return factors.empty(); }
  /// Right-to-left rendering; the empty word prints as "1".
  std::string display() const;
  friend bool operator==(const PictureWord&, const PictureWord&) = default;
};

/// Generator x(r)^delta.
inline SignedGenerator gen(int i, int j, int delta = 1) { return {Root{i, j}, delta}; }

/// 1-based vertex whose c-vector is delta * beta(i, j), if any.
std::optional<int> allowed(const ExtendedExchangeMatrix& m, const SignedGenerator& g);

/// mutate(m, allowed(m, g)); throws QuiverError when g is undefined on m.
ExtendedExchangeMatrix act(const ExtendedExchangeMatrix& m, const SignedGenerator& g);

class WordNotApplicable : public QuiverError {
 public:
  WordNotApplicable(std::size_t index, const SignedGenerator& g);
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

/// Folds act over w in application order; throws WordNotApplicable with the
/// index of the first undefined factor.
ExtendedExchangeMatrix act_word(ExtendedExchangeMatrix m, const PictureWord& w);

/// The generator read off each mutated c-vector along s.
PictureWord word_from_sequence(ExtendedExchangeMatrix m, const MutationSequence& s);

/// x(beta_{n-1,n}) ... x(beta_{12}) x(beta_{01}): beta_{01} acts first.
PictureWord coxeter(int n);

enum class RelationKind { Commutation, Hexagon };

struct Relation {
  RelationKind kind;
  PictureWord lhs;
  PictureWord rhs;
};

/// Commutations x_ij x_kl = x_kl x_ij for disjoint intervals [i, j], [k, l],
/// then hexagons x_jk x_ij = x_ij x_ik x_jk for 0 <= i < j < k <= n.
std::vector<Relation> relations(int n);

/// Commutation candidates for strictly nested intervals with four distinct
/// endpoints. These are not part of relations(n).
std::vector<Relation> nested_commutations(int n);

enum class RelationVerdict { BothUndefined, OneUndefined, AgreeTrue, Disagree };

std::string to_string(RelationVerdict v);

/// Acts with both sides of rel. The results agree when they are the same
/// state up to relabeling nonfrozen vertices, i.e. related by permute_rows.
RelationVerdict relation_holds_on(const ExtendedExchangeMatrix& m, const Relation& rel);

}  // namespace quiver
