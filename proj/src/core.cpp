#include "dicke/core.hpp"

#include <algorithm>
#include <cmath>

namespace dicke {

namespace {

void require_finite_positive(double v, const char* name) {
  if (!std::isfinite(v) || v <= 0.0) {
    throw DomainError(std::string(name) + " must be finite and > 0");
  }
}

void require_finite_non_negative(double v, const char* name) {
  if (!std::isfinite(v) || v < 0.0) {
    throw DomainError(std::string(name) + " must be finite and >= 0");
  }
}

}  // namespace

void ModelParams::validate() const {
  require_finite_positive(omega, "omega");
  require_finite_non_negative(Omega, "Omega");
  require_finite_non_negative(lambda, "lambda");
  require_finite_positive(T, "T");
  require_finite_positive(delta_x, "delta_x");
  if (!std::isfinite(beta())) throw DomainError("beta = 1/T is not finite");
}

IntensityGrid::IntensityGrid(std::vector<double> points) : points_(std::move(points)) {
  if (points_.size() < 2) throw DomainError("intensity grid needs at least two points");
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (!std::isfinite(points_[i])) throw DomainError("intensity grid point is not finite");
    if (i > 0 && !(points_[i] > points_[i - 1])) {
      throw DomainError("intensity grid must be strictly increasing");
    }
  }
  if (points_.front() < 0.0) throw DomainError("intensity grid starts below zero");
}

IntensityGrid make_linear_grid(double y_min, double y_max, std::size_t n) {
  if (!(y_min < y_max)) throw DomainError("linear grid needs y_min < y_max");
  if (n < 2) throw DomainError("linear grid needs n >= 2");
  std::vector<double> pts(n);
  const double step = (y_max - y_min) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) pts[i] = y_min + step * static_cast<double>(i);
  pts.back() = y_max;
  return IntensityGrid(std::move(pts));
}

IntensityGrid make_log_grid(double y_min, double y_max, std::size_t n) {
  if (!(y_min > 0.0)) throw DomainError("log grid needs y_min > 0");
  if (!(y_min < y_max)) throw DomainError("log grid needs y_min < y_max");
  if (n < 2) throw DomainError("log grid needs n >= 2");
  std::vector<double> pts(n);
  const double a = std::log(y_min);
  const double step = (std::log(y_max) - a) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) pts[i] = std::exp(a + step * static_cast<double>(i));
  pts.front() = y_min;
  pts.back() = y_max;
  return IntensityGrid(std::move(pts));
}

void LogSumAccumulator::add(double exponent) {
  if (!std::isfinite(exponent)) throw DomainError("invalid exponent");
  if (count_ == 0) {
    max_ = exponent;
    scaled_sum_ = 1.0;
  } else if (exponent > max_) {
    scaled_sum_ = scaled_sum_ * std::exp(max_ - exponent) + 1.0;
    max_ = exponent;
  } else {
    scaled_sum_ += std::exp(exponent - max_);
  }
  ++count_;
}

double LogSumAccumulator::value() const {
  if (count_ == 0) throw DomainError("empty sum");
  return max_ + std::log(scaled_sum_);
}

double log_sum_exp(std::span<const double> terms) {
  if (terms.empty()) throw DomainError("empty sum");
  double top = terms.front();
  for (double t : terms) {
    if (!std::isfinite(t)) throw DomainError("invalid exponent");
    top = std::max(top, t);
  }
  double sum = 0.0;
  for (double t : terms) sum += std::exp(t - top);
  return top + std::log(sum);
}

}  // namespace dicke
