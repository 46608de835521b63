#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "expressivity/interval.hpp"

namespace expressivity {

struct LinearPiece {
  double slope = 0.0;
  double intercept = 0.0;

  double operator()(double x) const noexcept { return slope * x + intercept; }
  friend bool operator==(const LinearPiece&, const LinearPiece&) = default;
};

/// Continuous piecewise-linear function on a closed interval.
///
/// Breakpoints are strictly inside the domain and sorted; piece k spans
/// [breakpoint k-1, breakpoint k] with the domain ends closing the first and
/// last pieces. In canonical form adjacent slopes differ by more than the merge
/// tolerance, so the pieces are exactly the maximal linear regions.
class PiecewiseLinear1D {
public:
  /// Adjacent pieces merge when |slope difference| <= kSlopeMergeTol * (1 + max |slope|).
  static constexpr double kSlopeMergeTol = 1e-9;
  /// Relative tolerance on the continuity check at breakpoints.
  static constexpr double kContinuityTol = 1e-9;

  PiecewiseLinear1D() : PiecewiseLinear1D(kUnitInterval, {}, {LinearPiece{}}) {}

  /// Validates ordering and continuity; does not merge pieces.
  PiecewiseLinear1D(Interval domain, std::vector<double> breakpoints, std::vector<LinearPiece> pieces);

  /// Function interpolating the vertices (x_0, y_0) .. (x_m, y_m); x_0 and x_m
  /// become the domain ends.
  static PiecewiseLinear1D from_vertices(const std::vector<double>& xs, const std::vector<double>& ys);
  static PiecewiseLinear1D linear(Interval domain, double slope, double intercept);

  /// Merges pieces with (numerically) equal slopes and drops breakpoints that
  /// coincide with the domain ends.
  PiecewiseLinear1D canonical() const;
  bool is_canonical() const;

  const Interval& domain() const noexcept { return domain_; }
  const std::vector<double>& breakpoints() const noexcept { return breakpoints_; }
  const std::vector<LinearPiece>& pieces() const noexcept { return pieces_; }
  std::size_t piece_count() const noexcept { return pieces_.size(); }
  Interval piece_interval(std::size_t k) const;

  double operator()(double x) const noexcept;
  /// Smallest |slope jump| over all breakpoints (infinity when there are none).
  double min_slope_jump() const noexcept;
  /// Image interval [min f, max f] over the domain.
  Interval range() const;

private:
  Interval domain_;
  std::vector<double> breakpoints_;
  std::vector<LinearPiece> pieces_;
};

/// Maximal linear regions L(F) as closed intervals sharing endpoints.
struct RegionSet {
  Interval domain;
  std::vector<Interval> regions;

  std::size_t count() const noexcept { return regions.size(); }
  double domain_length() const noexcept { return domain.length(); }
  double total_length() const noexcept;
};

RegionSet regions(const PiecewiseLinear1D& pwl);

/// I(F): largest region length divided by the domain length.
double fineness(const RegionSet& rs);
double fineness(const PiecewiseLinear1D& pwl);

struct CorollaryCheck {
  std::size_t count = 0;
  double bound = 0.0;  // 1 / I(F)
  bool holds = false;
};

/// |L(F)| >= 1 / I(F), accepted with slack 1e-12.
CorollaryCheck corollary_check(const RegionSet& rs);

struct RefinementReport {
  bool holds = false;
  double r = 0.0;
  /// First breakpoint of f with no matching breakpoint of g, when refinement fails.
  std::optional<double> missing_breakpoint;
  /// Region of f containing the largest ratio (or the failing breakpoint).
  std::optional<Interval> witness_region;
  std::string witness;
};

/// Whether g refines f (g <=_r f): every breakpoint of f is, within 1e-9, a
/// breakpoint of g. r is the largest ratio (longest g-region inside U) / |U|
/// over the regions U of f. A g-region belongs to U when its interior lies
/// inside U; regions touching U only at an endpoint are ignored.
RefinementReport check_refinement(const PiecewiseLinear1D& g, const PiecewiseLinear1D& f);

struct IdentificationResult {
  bool holds = false;
  std::size_t pieces = 0;  // K
  std::optional<std::size_t> failing_piece;
  std::string witness;
};

/// Whether h maps every one of its pieces onto `codomain`, in either
/// orientation (end-point images match the codomain ends within 1e-9).
IdentificationResult check_identification(const PiecewiseLinear1D& h, Interval codomain);

/// outer o inner on inner's domain. Outer's end pieces are extended linearly
/// if inner leaves outer's domain. The result is canonical.
PiecewiseLinear1D compose(const PiecewiseLinear1D& outer, const PiecewiseLinear1D& inner);

/// CSV with header `left,right,slope,intercept`, one row per piece.
std::string to_csv(const PiecewiseLinear1D& pwl);

}  // namespace expressivity
