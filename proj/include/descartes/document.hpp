#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "descartes/euclid_flower.hpp"

namespace descartes {

/// JSON exchange format for a flower:
///
///   {"n": 3, "central_curvature": ..., "petal_curvatures": [...],
///    "tolerance": 1e-9,
///    "circles": [{"cx": ..., "cy": ..., "r": ...}, ...]}
///
/// circles is optional; when present the central circle comes first.
struct FlowerDocument {
  std::size_t n = 0;
  double central_curvature = 0.0;
  std::vector<double> petal_curvatures;
  std::optional<std::vector<Circle>> circles;
  double tolerance = kDefaultTangencyTolerance;

  static FlowerDocument from_layout(const FlowerLayout& layout);
  /// Throws DomainError on malformed or inconsistent documents.
  static FlowerDocument parse(const std::string& json_text);

  /// Numbers at 17 significant digits, so parse(to_json()) is exact.
  std::string to_json() const;

  /// Rebuilds the layout from circles (gap angles recomputed from centres).
  /// Throws DomainError when circles are absent.
  FlowerLayout layout() const;
};

/// One <circle> per circle, central first with a distinct stroke; viewBox is
/// the bounding box padded by 10% on each side, stroke width 0.5% of its
/// larger extent. Throws DomainError when circles are absent.
std::string render_svg(const FlowerDocument& doc);

}  // namespace descartes
