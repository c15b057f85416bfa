#include "quiver/quiver_core.hpp"

#include <sstream>

namespace quiver {

std::string to_string(const MutationSequence& s) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < s.steps.size(); ++i) {
    if (i) out << ',';
    out << s.steps[i];
  }
  out << ')';
  return out.str();
}

}  // namespace quiver
