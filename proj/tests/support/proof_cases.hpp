#pragma once

#include <string>
#include <vector>

#include "quiver/standard.hpp"

namespace oracle {

// Row-by-row assertions from the proof of the preservation lemma, checked on
// one step. Green x_ij with j - i > 1: rows strictly between i + 1 and j never
// change, and row j must change, taking -beta(m, j), m > i, to +beta(i, m).
// Red x_ij^{-1} mirrors this: rows strictly between are fixed, and row i + 1
// must change, taking +beta(i, m), m < j, to -beta(m, j).
std::vector<std::string> proof_case_violations(const quiver::PreservationStep& step);

}  // namespace oracle
