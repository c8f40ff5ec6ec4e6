#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace aus {

// AoI cost functions. All kinds are non-negative and non-decreasing on
// x >= 0; the factory functions throw std::invalid_argument otherwise.
class CostFn {
 public:
  struct Linear {
    double alpha;
  };
  struct Quadratic {
    double alpha;
  };
  // alpha * (exp(beta * x) - 1)
  struct Exponential {
    double alpha;
    double beta;
  };
  // low for x <= threshold, high above.
  struct Step {
    double threshold;
    double low;
    double high;
  };
  // Linear interpolation between (x, y) breakpoints, flat outside them.
  struct PiecewiseLinear {
    std::vector<std::pair<double, double>> breakpoints;
  };
  using Kind = std::variant<Linear, Quadratic, Exponential, Step, PiecewiseLinear>;

  static CostFn linear(double alpha);
  static CostFn quadratic(double alpha);
  static CostFn exponential(double alpha, double beta);
  static CostFn step(double threshold, double low, double high);
  static CostFn piecewise_linear(std::vector<std::pair<double, double>> breakpoints);

  double operator()(double x) const;

  /// Exact definite integral over [lo, hi] (lo <= hi, lo >= 0).
  double integral(double lo, double hi) const;

  const Kind& kind() const { return kind_; }
  std::string kind_name() const;

  friend bool operator==(const CostFn& a, const CostFn& b);

 private:
  explicit CostFn(Kind kind) : kind_(std::move(kind)) {}
  Kind kind_;
};

bool operator==(const CostFn::Linear& a, const CostFn::Linear& b);
bool operator==(const CostFn::Quadratic& a, const CostFn::Quadratic& b);
bool operator==(const CostFn::Exponential& a, const CostFn::Exponential& b);
bool operator==(const CostFn::Step& a, const CostFn::Step& b);
bool operator==(const CostFn::PiecewiseLinear& a, const CostFn::PiecewiseLinear& b);

}  // namespace aus
