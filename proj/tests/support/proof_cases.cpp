#include "proof_cases.hpp"

namespace oracle {

using namespace quiver;

std::vector<std::string> proof_case_violations(const PreservationStep& step) {
  std::vector<std::string> out;
  const int i = step.generator.root.i;
  const int j = step.generator.root.j;
  const bool green = step.generator.delta > 0;
  if (j - i <= 1) return out;

  for (int l = i + 2; l < j; ++l) {
    if (step.mutated.row(l - 1) != step.before.row(l - 1)) out.push_back("row " + std::to_string(l) + " changed");
  }

  const int watched = green ? j : i + 1;
  if (step.mutated.row(watched - 1) == step.before.row(watched - 1)) {
    out.push_back("row " + std::to_string(watched) + " unchanged");
    return out;
  }
  const auto old_row = vector_to_signed_root(step.before.row(watched - 1).transpose());
  const auto new_row = vector_to_signed_root(step.mutated.row(watched - 1).transpose());
  if (!old_row || !new_row) {
    out.push_back("row " + std::to_string(watched) + " is not a signed root");
    return out;
  }
  bool ok;
  if (green) {
    const int m = old_row->root.i;
    ok = old_row->sign < 0 && old_row->root.j == j && m > i && *new_row == SignedRoot{1, Root{i, m}};
  } else {
    const int m = old_row->root.j;
    ok = old_row->sign > 0 && old_row->root.i == i && m < j && *new_row == SignedRoot{-1, Root{m, j}};
  }
  if (!ok) {
    out.push_back("row " + std::to_string(watched) + ": " + to_string(*old_row) + " -> " + to_string(*new_row));
  }
  return out;
}

}  // namespace oracle
