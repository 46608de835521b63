#include "expressivity/pwl.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "expressivity/csv.hpp"

namespace expressivity {

namespace {

constexpr double kMatchTol = 1e-9;

bool slopes_merge(double a, double b) {
  const double scale = 1.0 + std::max(std::abs(a), std::abs(b));
  return std::abs(a - b) <= PiecewiseLinear1D::kSlopeMergeTol * scale;
}

}  // namespace

PiecewiseLinear1D::PiecewiseLinear1D(Interval domain, std::vector<double> breakpoints,
                                     std::vector<LinearPiece> pieces)
    : domain_(domain), breakpoints_(std::move(breakpoints)), pieces_(std::move(pieces)) {
  if (!(std::isfinite(domain_.lo) && std::isfinite(domain_.hi) && domain_.lo < domain_.hi)) {
    throw std::invalid_argument("piecewise-linear domain must be a finite interval with lo < hi");
  }
  if (pieces_.size() != breakpoints_.size() + 1) {
    throw std::invalid_argument("piecewise-linear function needs breakpoints + 1 pieces");
  }
  for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
    const double t = breakpoints_[i];
    if (!(domain_.lo < t && t < domain_.hi)) {
      throw std::invalid_argument("breakpoint " + format_double(t) + " is not inside the domain");
    }
    if (i > 0 && !(breakpoints_[i - 1] < t)) {
      throw std::invalid_argument("breakpoints must be strictly increasing");
    }
    const double left = pieces_[i](t);
    const double right = pieces_[i + 1](t);
    const double scale = 1.0 + std::max(std::abs(left), std::abs(right));
    if (!(std::abs(left - right) <= kContinuityTol * scale)) {
      throw std::invalid_argument("discontinuity at breakpoint " + format_double(t) + ": " +
                                  format_double(left) + " vs " + format_double(right));
    }
  }
}

PiecewiseLinear1D PiecewiseLinear1D::from_vertices(const std::vector<double>& xs,
                                                   const std::vector<double>& ys) {
  if (xs.size() < 2 || xs.size() != ys.size()) {
    throw std::invalid_argument("need at least two vertices with matching x and y counts");
  }
  std::vector<LinearPiece> pieces;
  for (std::size_t k = 0; k + 1 < xs.size(); ++k) {
    const double slope = (ys[k + 1] - ys[k]) / (xs[k + 1] - xs[k]);
    pieces.push_back({slope, ys[k] - slope * xs[k]});
  }
  return PiecewiseLinear1D({xs.front(), xs.back()}, {xs.begin() + 1, xs.end() - 1}, std::move(pieces));
}

PiecewiseLinear1D PiecewiseLinear1D::linear(Interval domain, double slope, double intercept) {
  return PiecewiseLinear1D(domain, {}, {LinearPiece{slope, intercept}});
}

Interval PiecewiseLinear1D::piece_interval(std::size_t k) const {
  const double lo = k == 0 ? domain_.lo : breakpoints_.at(k - 1);
  const double hi = k == breakpoints_.size() ? domain_.hi : breakpoints_.at(k);
  return {lo, hi};
}

PiecewiseLinear1D PiecewiseLinear1D::canonical() const {
  std::vector<double> bps;
  std::vector<LinearPiece> pieces;
  LinearPiece cur = pieces_.front();
  double cur_left = domain_.lo;
  for (std::size_t k = 1; k < pieces_.size(); ++k) {
    const LinearPiece& next = pieces_[k];
    if (slopes_merge(cur.slope, next.slope)) {
      // Refit through the outer end points of the merged run.
      const double right = piece_interval(k).hi;
      const double y_left = cur(cur_left);
      const double y_right = next(right);
      const double slope = (y_right - y_left) / (right - cur_left);
      cur = {slope, y_left - slope * cur_left};
      continue;
    }
    bps.push_back(breakpoints_[k - 1]);
    pieces.push_back(cur);
    cur = next;
    cur_left = breakpoints_[k - 1];
  }
  pieces.push_back(cur);
  return PiecewiseLinear1D(domain_, std::move(bps), std::move(pieces));
}

bool PiecewiseLinear1D::is_canonical() const {
  for (std::size_t k = 1; k < pieces_.size(); ++k) {
    if (slopes_merge(pieces_[k - 1].slope, pieces_[k].slope)) return false;
  }
  return true;
}

double PiecewiseLinear1D::operator()(double x) const noexcept {
  const auto k = static_cast<std::size_t>(
      std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x) - breakpoints_.begin());
  return pieces_[k](x);
}

double PiecewiseLinear1D::min_slope_jump() const noexcept {
  double m = std::numeric_limits<double>::infinity();
  for (std::size_t k = 1; k < pieces_.size(); ++k) {
    m = std::min(m, std::abs(pieces_[k].slope - pieces_[k - 1].slope));
  }
  return m;
}

Interval PiecewiseLinear1D::range() const {
  double lo = std::min(pieces_.front()(domain_.lo), pieces_.back()(domain_.hi));
  double hi = std::max(pieces_.front()(domain_.lo), pieces_.back()(domain_.hi));
  for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
    const double v = pieces_[i](breakpoints_[i]);
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  return {lo, hi};
}

double RegionSet::total_length() const noexcept {
  double total = 0.0;
  for (const Interval& r : regions) total += r.length();
  return total;
}

RegionSet regions(const PiecewiseLinear1D& pwl) {
  RegionSet rs{pwl.domain(), {}};
  rs.regions.reserve(pwl.piece_count());
  for (std::size_t k = 0; k < pwl.piece_count(); ++k) rs.regions.push_back(pwl.piece_interval(k));
  return rs;
}

double fineness(const RegionSet& rs) {
  double longest = 0.0;
  for (const Interval& r : rs.regions) longest = std::max(longest, r.length());
  return longest / rs.domain_length();
}

double fineness(const PiecewiseLinear1D& pwl) { return fineness(regions(pwl)); }

CorollaryCheck corollary_check(const RegionSet& rs) {
  CorollaryCheck c;
  c.count = rs.count();
  c.bound = 1.0 / fineness(rs);
  c.holds = static_cast<double>(c.count) >= c.bound - 1e-12;
  return c;
}

RefinementReport check_refinement(const PiecewiseLinear1D& g, const PiecewiseLinear1D& f) {
  if (std::abs(g.domain().lo - f.domain().lo) > kMatchTol ||
      std::abs(g.domain().hi - f.domain().hi) > kMatchTol) {
    throw std::invalid_argument("refinement check needs functions on the same domain");
  }
  RefinementReport report;
  const auto& gb = g.breakpoints();
  const auto& fb = f.breakpoints();

  // Cut positions of g: index 0 is the domain start, gb.size() + 1 the end.
  std::vector<double> gcuts;
  gcuts.reserve(gb.size() + 2);
  gcuts.push_back(g.domain().lo);
  gcuts.insert(gcuts.end(), gb.begin(), gb.end());
  gcuts.push_back(g.domain().hi);

  // For each f cut, the index of the matching g cut.
  std::vector<std::size_t> matched{0};
  for (double t : fb) {
    auto it = std::lower_bound(gcuts.begin(), gcuts.end(), t);
    std::size_t best = gcuts.size();
    double best_dist = std::numeric_limits<double>::infinity();
    for (auto cand : {it, it == gcuts.begin() ? it : it - 1}) {
      if (cand == gcuts.end()) continue;
      const auto idx = static_cast<std::size_t>(cand - gcuts.begin());
      if (idx == 0 || idx + 1 == gcuts.size()) continue;  // domain ends are not breakpoints
      const double dist = std::abs(*cand - t);
      if (dist < best_dist) {
        best_dist = dist;
        best = idx;
      }
    }
    if (best == gcuts.size() || best_dist > kMatchTol) {
      report.holds = false;
      report.missing_breakpoint = t;
      const auto k = static_cast<std::size_t>(std::lower_bound(fb.begin(), fb.end(), t) - fb.begin());
      report.witness_region = f.piece_interval(k);
      report.witness = "breakpoint " + format_double(t) + " of f is not a breakpoint of g";
      return report;
    }
    matched.push_back(best);
  }
  matched.push_back(gcuts.size() - 1);

  report.holds = true;
  report.r = 0.0;
  for (std::size_t m = 0; m + 1 < matched.size(); ++m) {
    const Interval u = f.piece_interval(m);
    double longest = 0.0;
    for (std::size_t i = matched[m]; i < matched[m + 1]; ++i) {
      longest = std::max(longest, gcuts[i + 1] - gcuts[i]);
    }
    const double ratio = longest / u.length();
    if (ratio > report.r) {
      report.r = ratio;
      report.witness_region = u;
    }
  }
  return report;
}

IdentificationResult check_identification(const PiecewiseLinear1D& h, Interval codomain) {
  IdentificationResult res;
  res.pieces = h.piece_count();
  const double tol = kMatchTol * std::max(1.0, codomain.magnitude());
  auto near = [tol](double a, double b) { return std::abs(a - b) <= tol; };
  for (std::size_t k = 0; k < h.piece_count(); ++k) {
    const Interval u = h.piece_interval(k);
    const double ya = h.pieces()[k](u.lo);
    const double yb = h.pieces()[k](u.hi);
    const bool forward = near(ya, codomain.lo) && near(yb, codomain.hi);
    const bool reverse = near(ya, codomain.hi) && near(yb, codomain.lo);
    if (!forward && !reverse) {
      res.holds = false;
      res.failing_piece = k;
      res.witness = "piece " + std::to_string(k) + " on [" + format_double(u.lo) + ", " +
                    format_double(u.hi) + "] maps onto [" + format_double(std::min(ya, yb)) + ", " +
                    format_double(std::max(ya, yb)) + "], expected [" + format_double(codomain.lo) +
                    ", " + format_double(codomain.hi) + "]";
      return res;
    }
  }
  res.holds = true;
  return res;
}

PiecewiseLinear1D compose(const PiecewiseLinear1D& outer, const PiecewiseLinear1D& inner) {
  const auto& ob = outer.breakpoints();
  std::vector<double> cuts;
  std::vector<LinearPiece> pieces;
  bool first = true;
  for (std::size_t k = 0; k < inner.piece_count(); ++k) {
    const Interval span = inner.piece_interval(k);
    const LinearPiece p = inner.pieces()[k];
    std::vector<double> local{span.lo};
    if (p.slope != 0.0) {
      std::vector<double> hits;
      const double eps = 1e-12 * (1.0 + std::max(std::abs(span.lo), std::abs(span.hi)));
      for (double t : ob) {
        const double x = (t - p.intercept) / p.slope;
        if (x > span.lo + eps && x < span.hi - eps) hits.push_back(x);
      }
      std::sort(hits.begin(), hits.end());
      for (double x : hits) {
        if (x - local.back() > eps) local.push_back(x);
      }
    }
    local.push_back(span.hi);
    for (std::size_t s = 0; s + 1 < local.size(); ++s) {
      const double mid = 0.5 * (local[s] + local[s + 1]);
      const double y = p(mid);
      const auto j = static_cast<std::size_t>(std::upper_bound(ob.begin(), ob.end(), y) - ob.begin());
      const LinearPiece q = outer.pieces()[j];
      if (!first) cuts.push_back(local[s]);
      first = false;
      pieces.push_back({q.slope * p.slope, q.slope * p.intercept + q.intercept});
    }
  }
  return PiecewiseLinear1D(inner.domain(), std::move(cuts), std::move(pieces)).canonical();
}

std::string to_csv(const PiecewiseLinear1D& pwl) {
  std::ostringstream os;
  os << "left,right,slope,intercept\n";
  for (std::size_t k = 0; k < pwl.piece_count(); ++k) {
    const Interval u = pwl.piece_interval(k);
    os << format_double(u.lo) << ',' << format_double(u.hi) << ',' << format_double(pwl.pieces()[k].slope)
       << ',' << format_double(pwl.pieces()[k].intercept) << '\n';
  }
  return os.str();
}

}  // namespace expressivity
