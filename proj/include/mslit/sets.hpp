#pragma once

#include "mslit/grid.hpp"

namespace mslit {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  double length() const { return hi - lo; }
};

/// Finite union of disjoint half-open intervals [lo, hi), kept sorted.
class IntervalSet {
 public:
  IntervalSet() = default;
  explicit IntervalSet(std::vector<Interval> intervals);
  static IntervalSet single(double lo, double hi);

  const std::vector<Interval>& intervals() const { return intervals_; }
  bool empty() const { return intervals_.empty(); }
  double measure() const;
  /// Half-open membership: x on a lower edge is in, on an upper edge is out.
  bool contains(double x) const;

  IntervalSet shifted(double dx) const;
  /// Endpoint scaling by a positive factor.
  IntervalSet scaled(double factor) const;
  /// window \ this, as a disjoint sorted set. Throws if this is not contained
  /// in the window.
  IntervalSet complement_within(Interval window) const;

  Interval hull() const;  // throws on empty set

 private:
  std::vector<Interval> intervals_;
};

inline IntervalSet complement(const IntervalSet& s, Interval window) {
  return s.complement_within(window);
}

/// Periodic set: equidistant copies of `base` spaced by `period`.
/// n_cells == 0 means "enough copies to cover whatever grid it is realized
/// on"; otherwise exactly n_cells copies centered on the origin cell.
struct PeriodicSet {
  double period = 0.0;
  IntervalSet base;
  int n_cells = 0;
};

/// Wire grating geometry at the grating plane: n_wires absorbing wires of
/// width wire_width, centers spaced wire_spacing, symmetric about
/// lateral_shift.
struct GratingSpec {
  int n_wires = 0;
  double wire_width = 0.0;
  double wire_spacing = 0.0;
  double lateral_shift = 0.0;
};

/// The blocked (absorbing) set: one interval per wire.
IntervalSet grating_wires(const GratingSpec& g);

/// The transmitting set B = window \ wires. Throws if wires overlap or do
/// not fit in the window.
IntervalSet grating_to_set(const GratingSpec& g, Interval window);

/// 0/1 indicator mask of a set on a grid, half-open sampling.
std::vector<double> realize(const IntervalSet& s, const Grid& grid);

/// Indicator mask of a (truncated) periodic set. When the period is an exact
/// integer number of grid samples and the set covers the whole grid, the mask
/// is produced by index folding so that it is exactly periodic as an array.
std::vector<double> realize(const PeriodicSet& s, const Grid& grid);

/// Explicit truncated interval union of a periodic set, covering the given
/// grid (or n_cells copies when set.n_cells > 0).
IntervalSet truncate_to_grid(const PeriodicSet& s, const Grid& grid);

}  // namespace mslit
