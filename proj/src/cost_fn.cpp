#include "aus/cost_fn.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace aus {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

bool finite(double v) { return std::isfinite(v); }

// Integral of the linear segment through (x0, y0), (x1, y1) over [lo, hi],
// where [lo, hi] lies inside [x0, x1].
double segment_integral(double x0, double y0, double x1, double y1, double lo,
                        double hi) {
  const double slope = (y1 - y0) / (x1 - x0);
  const double ylo = y0 + slope * (lo - x0);
  const double yhi = y0 + slope * (hi - x0);
  return 0.5 * (ylo + yhi) * (hi - lo);
}

}  // namespace

CostFn CostFn::linear(double alpha) {
  require(finite(alpha) && alpha >= 0.0, "linear cost: alpha must be >= 0");
  return CostFn(Linear{alpha});
}

CostFn CostFn::quadratic(double alpha) {
  require(finite(alpha) && alpha >= 0.0, "quadratic cost: alpha must be >= 0");
  return CostFn(Quadratic{alpha});
}

CostFn CostFn::exponential(double alpha, double beta) {
  require(finite(alpha) && finite(beta), "exponential cost: non-finite parameter");
  // alpha*(e^{beta x}-1) is non-decreasing and non-negative iff alpha*beta >= 0
  // with alpha >= 0.
  require(alpha >= 0.0 && beta >= 0.0,
          "exponential cost: alpha and beta must be >= 0");
  return CostFn(Exponential{alpha, beta});
}

CostFn CostFn::step(double threshold, double low, double high) {
  require(finite(threshold) && finite(low) && finite(high),
          "step cost: non-finite parameter");
  require(low >= 0.0, "step cost: low must be >= 0");
  require(high >= low, "step cost: high must be >= low");
  return CostFn(Step{threshold, low, high});
}

CostFn CostFn::piecewise_linear(std::vector<std::pair<double, double>> breakpoints) {
  require(!breakpoints.empty(), "piecewise-linear cost: no breakpoints");
  for (std::size_t k = 0; k < breakpoints.size(); ++k) {
    const auto [x, y] = breakpoints[k];
    require(finite(x) && finite(y), "piecewise-linear cost: non-finite breakpoint");
    require(y >= 0.0, "piecewise-linear cost: negative value");
    if (k > 0) {
      require(x > breakpoints[k - 1].first,
              "piecewise-linear cost: breakpoints must be strictly increasing in x");
      require(y >= breakpoints[k - 1].second,
              "piecewise-linear cost: values must be non-decreasing");
    }
  }
  return CostFn(PiecewiseLinear{std::move(breakpoints)});
}

double CostFn::operator()(double x) const {
  struct Eval {
    double x;
    double operator()(const Linear& f) const { return f.alpha * x; }
    double operator()(const Quadratic& f) const { return f.alpha * x * x; }
    double operator()(const Exponential& f) const {
      return f.alpha * std::expm1(f.beta * x);
    }
    double operator()(const Step& f) const { return x <= f.threshold ? f.low : f.high; }
    double operator()(const PiecewiseLinear& f) const {
      const auto& bp = f.breakpoints;
      if (x <= bp.front().first) return bp.front().second;
      if (x >= bp.back().first) return bp.back().second;
      auto it = std::upper_bound(bp.begin(), bp.end(), x,
                                 [](double v, const auto& p) { return v < p.first; });
      const auto& [x1, y1] = *it;
      const auto& [x0, y0] = *(it - 1);
      return y0 + (y1 - y0) * (x - x0) / (x1 - x0);
    }
  };
  return std::visit(Eval{x}, kind_);
}

double CostFn::integral(double lo, double hi) const {
  if (hi < lo) throw std::invalid_argument("integral: hi < lo");
  struct Integrate {
    double lo, hi;
    double operator()(const Linear& f) const {
      return 0.5 * f.alpha * (hi * hi - lo * lo);
    }
    double operator()(const Quadratic& f) const {
      return f.alpha * (hi * hi * hi - lo * lo * lo) / 3.0;
    }
    double operator()(const Exponential& f) const {
      if (f.beta == 0.0) return 0.0;
      // alpha * [ (e^{beta x} - 1)/beta - x ]_lo^hi, written with expm1 for accuracy
      const double upper = std::expm1(f.beta * hi) / f.beta - hi;
      const double lower = std::expm1(f.beta * lo) / f.beta - lo;
      return f.alpha * (upper - lower);
    }
    double operator()(const Step& f) const {
      const double split = std::clamp(f.threshold, lo, hi);
      return f.low * (split - lo) + f.high * (hi - split);
    }
    double operator()(const PiecewiseLinear& f) const {
      const auto& bp = f.breakpoints;
      double total = 0.0;
      // flat head
      if (lo < bp.front().first) {
        total += bp.front().second * (std::min(hi, bp.front().first) - lo);
      }
      for (std::size_t k = 1; k < bp.size(); ++k) {
        const double a = std::max(lo, bp[k - 1].first);
        const double b = std::min(hi, bp[k].first);
        if (b > a) {
          total += segment_integral(bp[k - 1].first, bp[k - 1].second, bp[k].first,
                                    bp[k].second, a, b);
        }
      }
      // flat tail
      if (hi > bp.back().first) {
        total += bp.back().second * (hi - std::max(lo, bp.back().first));
      }
      return total;
    }
  };
  return std::visit(Integrate{lo, hi}, kind_);
}

std::string CostFn::kind_name() const {
  struct Name {
    std::string operator()(const Linear&) const { return "linear"; }
    std::string operator()(const Quadratic&) const { return "quadratic"; }
    std::string operator()(const Exponential&) const { return "exponential"; }
    std::string operator()(const Step&) const { return "step"; }
    std::string operator()(const PiecewiseLinear&) const { return "piecewise_linear"; }
  };
  return std::visit(Name{}, kind_);
}

bool operator==(const CostFn::Linear& a, const CostFn::Linear& b) {
  return a.alpha == b.alpha;
}
bool operator==(const CostFn::Quadratic& a, const CostFn::Quadratic& b) {
  return a.alpha == b.alpha;
}
bool operator==(const CostFn::Exponential& a, const CostFn::Exponential& b) {
  return a.alpha == b.alpha && a.beta == b.beta;
}
bool operator==(const CostFn::Step& a, const CostFn::Step& b) {
  return a.threshold == b.threshold && a.low == b.low && a.high == b.high;
}
bool operator==(const CostFn::PiecewiseLinear& a, const CostFn::PiecewiseLinear& b) {
  return a.breakpoints == b.breakpoints;
}
bool operator==(const CostFn& a, const CostFn& b) { return a.kind_ == b.kind_; }

}  // namespace aus
