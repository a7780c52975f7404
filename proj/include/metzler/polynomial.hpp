#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "metzler/errors.hpp"

namespace metzler {

/// Univariate real-coefficient polynomial, coefficients lowest degree first.
/// Trailing coefficients that are zero relative to the largest one are
/// trimmed on construction.
class Polynomial {
 public:
  Polynomial() : coef_{0.0} {}

  explicit Polynomial(std::vector<double> coef) : coef_(std::move(coef)) {
    if (coef_.empty()) coef_.push_back(0.0);
    for (double c : coef_)
      if (!std::isfinite(c)) throw InternalError("polynomial: non-finite coefficient");
    trim();
  }

  static Polynomial constant(double c) { return Polynomial({c}); }
  static Polynomial one() { return constant(1.0); }

  int degree() const { return static_cast<int>(coef_.size()) - 1; }

  /// Coefficient of u^k (0 beyond the stored degree).
  double operator[](int k) const {
    return (k >= 0 && k < static_cast<int>(coef_.size()))
               ? coef_[static_cast<std::size_t>(k)]
               : 0.0;
  }

  const std::vector<double>& coefficients() const { return coef_; }

  double eval(double u) const {
    double acc = 0.0;
    for (std::size_t k = coef_.size(); k-- > 0;) acc = acc * u + coef_[k];
    return acc;
  }

  std::complex<double> eval(std::complex<double> u) const {
    std::complex<double> acc = 0.0;
    for (std::size_t k = coef_.size(); k-- > 0;) acc = acc * u + coef_[k];
    return acc;
  }

  Polynomial operator+(const Polynomial& o) const {
    std::vector<double> c(std::max(coef_.size(), o.coef_.size()), 0.0);
    for (std::size_t k = 0; k < c.size(); ++k)
      c[k] = (*this)[static_cast<int>(k)] + o[static_cast<int>(k)];
    return Polynomial(std::move(c));
  }

  Polynomial operator-(const Polynomial& o) const {
    std::vector<double> c(std::max(coef_.size(), o.coef_.size()), 0.0);
    for (std::size_t k = 0; k < c.size(); ++k)
      c[k] = (*this)[static_cast<int>(k)] - o[static_cast<int>(k)];
    return Polynomial(std::move(c));
  }

  Polynomial operator*(const Polynomial& o) const {
    std::vector<double> c(coef_.size() + o.coef_.size() - 1, 0.0);
    for (std::size_t i = 0; i < coef_.size(); ++i)
      for (std::size_t j = 0; j < o.coef_.size(); ++j) c[i + j] += coef_[i] * o.coef_[j];
    return Polynomial(std::move(c));
  }

  Polynomial operator*(double s) const {
    std::vector<double> c = coef_;
    for (double& x : c) x *= s;
    return Polynomial(std::move(c));
  }

 private:
  void trim() {
    double scale = 0.0;
    for (double c : coef_) scale = std::max(scale, std::abs(c));
    const double tol = 1e-12 * std::max(1.0, scale);
    while (coef_.size() > 1 && std::abs(coef_.back()) <= tol) coef_.pop_back();
  }

  std::vector<double> coef_;
};

/// Worst per-coefficient deviation, scaled: relative against |b_k| when
/// |b_k| >= 1e-2, else against 1e-2 (so a uniform 1e-8 bound means 1e-8
/// relative for sizable coefficients and 1e-10 absolute for small ones).
inline double max_scaled_coeff_error(const Polynomial& a, const Polynomial& b) {
  const int deg = std::max(a.degree(), b.degree());
  double worst = 0.0;
  for (int k = 0; k <= deg; ++k) {
    const double denom = std::max(std::abs(b[k]), 1e-2);
    worst = std::max(worst, std::abs(a[k] - b[k]) / denom);
  }
  return worst;
}

}  // namespace metzler
