#include "bracelab/series.hpp"

#include <string>

#include "bracelab/errors.hpp"

namespace bracelab {

std::string_view to_string(SeriesKind kind) {
  switch (kind) {
    case SeriesKind::left:
      return "left";
    case SeriesKind::right:
      return "right";
    case SeriesKind::strong:
      return "strong";
    case SeriesKind::solvable:
      return "solvable";
    case SeriesKind::lie_lower_central:
      return "lie_lower_central";
  }
  return "?";
}

SeriesKind series_kind_from_string(std::string_view name) {
  if (name == "left") return SeriesKind::left;
  if (name == "right") return SeriesKind::right;
  if (name == "strong") return SeriesKind::strong;
  throw InvariantViolation("unknown series kind '" + std::string(name) + "'");
}

}  // namespace bracelab
