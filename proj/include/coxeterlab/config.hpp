#pragma once

namespace coxeterlab {

/// Process-wide limits. Values are read once from the environment
/// (COXETERLAB_LEVEL_CAP) and may be overridden programmatically.
struct Limits {
  /// Largest level L for which Q(2cos(pi/L)) arithmetic is permitted.
  int level_cap = 840;
  /// Largest diagram order accepted by the cycle-sum determinant.
  int cycle_det_order_cap = 9;
  /// Largest total vertex count accepted by product searches.
  int product_order_cap = 12;
};

Limits& limits();

}  // namespace coxeterlab
