#include "mslit/sets.hpp"

#include <algorithm>
#include <cmath>

namespace mslit {

IntervalSet::IntervalSet(std::vector<Interval> intervals)
    : intervals_(std::move(intervals)) {
  for (const Interval& iv : intervals_)
    if (!(iv.lo < iv.hi))
      throw std::invalid_argument("IntervalSet: interval with lo >= hi");
  std::sort(intervals_.begin(), intervals_.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  for (std::size_t i = 1; i < intervals_.size(); ++i)
    if (intervals_[i].lo < intervals_[i - 1].hi)
      throw std::invalid_argument("IntervalSet: overlapping intervals");
}

IntervalSet IntervalSet::single(double lo, double hi) {
  return IntervalSet(std::vector<Interval>{{lo, hi}});
}

double IntervalSet::measure() const {
  double m = 0.0;
  for (const Interval& iv : intervals_) m += iv.length();
  return m;
}

bool IntervalSet::contains(double x) const {
  // first interval with hi > x
  auto it = std::upper_bound(
      intervals_.begin(), intervals_.end(), x,
      [](double v, const Interval& iv) { return v < iv.hi; });
  return it != intervals_.end() && it->lo <= x;
}

IntervalSet IntervalSet::shifted(double dx) const {
  std::vector<Interval> out = intervals_;
  for (Interval& iv : out) {
    iv.lo += dx;
    iv.hi += dx;
  }
  IntervalSet s;
  s.intervals_ = std::move(out);
  return s;
}

IntervalSet IntervalSet::scaled(double factor) const {
  if (!(factor > 0.0))
    throw std::invalid_argument("IntervalSet::scaled: factor must be positive");
  std::vector<Interval> out = intervals_;
  for (Interval& iv : out) {
    iv.lo *= factor;
    iv.hi *= factor;
  }
  IntervalSet s;
  s.intervals_ = std::move(out);
  return s;
}

IntervalSet IntervalSet::complement_within(Interval window) const {
  if (!empty() &&
      (intervals_.front().lo < window.lo || intervals_.back().hi > window.hi))
    throw std::invalid_argument("complement: set exceeds the window");
  std::vector<Interval> out;
  double cursor = window.lo;
  for (const Interval& iv : intervals_) {
    if (iv.lo > cursor) out.push_back({cursor, iv.lo});
    cursor = iv.hi;
  }
  if (cursor < window.hi) out.push_back({cursor, window.hi});
  IntervalSet s;
  s.intervals_ = std::move(out);
  return s;
}

Interval IntervalSet::hull() const {
  if (empty()) throw std::invalid_argument("hull of empty set");
  return Interval{intervals_.front().lo, intervals_.back().hi};
}

IntervalSet grating_wires(const GratingSpec& g) {
  if (g.n_wires < 0) throw std::invalid_argument("negative wire count");
  if (g.n_wires > 0 && g.wire_width < 0.0)
    throw std::invalid_argument("wire width must be nonnegative");
  if (g.n_wires > 0 && g.wire_width == 0.0) return IntervalSet();
  if (g.n_wires > 1 && !(g.wire_width < g.wire_spacing))
    throw std::invalid_argument("wires overlap: width >= spacing");
  std::vector<Interval> wires;
  wires.reserve(g.n_wires);
  for (int i = 0; i < g.n_wires; ++i) {
    double center = (i - 0.5 * (g.n_wires - 1)) * g.wire_spacing + g.lateral_shift;
    wires.push_back({center - 0.5 * g.wire_width, center + 0.5 * g.wire_width});
  }
  return IntervalSet(std::move(wires));
}

IntervalSet grating_to_set(const GratingSpec& g, Interval window) {
  return grating_wires(g).complement_within(window);
}

std::vector<double> realize(const IntervalSet& s, const Grid& grid) {
  std::vector<double> mask(grid.n_points, 0.0);
  for (int j = 0; j < grid.n_points; ++j)
    if (s.contains(grid.coord(j))) mask[j] = 1.0;
  return mask;
}

IntervalSet truncate_to_grid(const PeriodicSet& s, const Grid& grid) {
  if (!(s.period > 0.0)) throw std::invalid_argument("period must be positive");
  if (s.base.empty()) return IntervalSet();
  Interval hull = s.base.hull();
  if (hull.length() > s.period)
    throw std::invalid_argument("base does not fit within one period");
  int m_lo, m_hi;
  if (s.n_cells > 0) {
    m_lo = -(s.n_cells / 2);
    m_hi = m_lo + s.n_cells - 1;
  } else {
    double xmin = grid.coord(0);
    double xmax = grid.coord(grid.n_points - 1);
    m_lo = static_cast<int>(std::floor((xmin - hull.hi) / s.period));
    m_hi = static_cast<int>(std::ceil((xmax - hull.lo) / s.period));
  }
  std::vector<Interval> out;
  for (int m = m_lo; m <= m_hi; ++m)
    for (const Interval& iv : s.base.intervals())
      out.push_back({iv.lo + m * s.period, iv.hi + m * s.period});
  return IntervalSet(std::move(out));
}

std::vector<double> realize(const PeriodicSet& s, const Grid& grid) {
  if (!(s.period > 0.0)) throw std::invalid_argument("period must be positive");
  const int n = grid.n_points;
  const double dx = grid.spacing();
  const double q = s.period / dx;
  const double qr = std::round(q);
  // Exact-tiling path: the sampled indicator of a genuinely periodic set is
  // an exactly periodic array when the period is an integer number of
  // samples. Folding the index makes that exact in floating point too.
  if (s.n_cells == 0 && std::abs(q - qr) < 1e-9 * q && qr >= 1.0 &&
      qr <= static_cast<double>(n) && n % 2 == 0) {
    const int qi = static_cast<int>(qr);
    const int origin = n / 2;  // coord(n/2) == 0
    std::vector<double> cell(qi, 0.0);
    for (int r = 0; r < qi; ++r) {
      double x = r * dx;  // representative of the residue class
      bool member = false;
      for (const Interval& iv : s.base.intervals()) {
        // candidate translate bringing x near this interval
        double mid = 0.5 * (iv.lo + iv.hi);
        double m = std::round((x - mid) / s.period);
        for (int dm = -1; dm <= 1 && !member; ++dm) {
          double y = x - (m + dm) * s.period;
          member = (iv.lo <= y && y < iv.hi);
        }
        if (member) break;
      }
      if (member) cell[r] = 1.0;
    }
    std::vector<double> mask(n);
    for (int j = 0; j < n; ++j) {
      int r = (j - origin) % qi;
      if (r < 0) r += qi;
      mask[j] = cell[r];
    }
    return mask;
  }
  return realize(truncate_to_grid(s, grid), grid);
}

}  // namespace mslit
