#pragma once

#include <cmath>
#include <complex>
#include <numbers>

namespace extcauchy {

using cplx = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr cplx kI{0.0, 1.0};

inline bool is_finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

/// exp(i*pi*x) for real x. The argument is reduced modulo 2 before scaling so
/// that rational multiples of pi (the common case here) land on exact values
/// such as 1, -1, i.
inline cplx cis_pi(double x) {
  double r = std::remainder(x, 2.0);  // exact, r in [-1, 1]
  if (r == 0.0) return {1.0, 0.0};
  if (r == 1.0 || r == -1.0) return {-1.0, 0.0};
  if (r == 0.5) return {0.0, 1.0};
  if (r == -0.5) return {0.0, -1.0};
  return {std::cos(kPi * r), std::sin(kPi * r)};
}

/// exp(i*pi*w) for complex w.
inline cplx cis_pi(cplx w) { return std::exp(-kPi * w.imag()) * cis_pi(w.real()); }

/// 1 + cos(pi * num / den) for integers, exact zero when num/den is an odd integer.
inline double one_plus_cos_pi_ratio(long num, long den) {
  long period = 2 * den;
  long r = ((num % period) + period) % period;
  if (r == den) return 0.0;
  return 1.0 + std::cos(kPi * static_cast<double>(r) / static_cast<double>(den));
}

/// Neumaier-compensated accumulator; real and imaginary parts are carried
/// independently.
class CompensatedSum {
 public:
  void add(double x) { add_part(x, sum_re_, comp_re_); }
  void add(cplx z) {
    add_part(z.real(), sum_re_, comp_re_);
    add_part(z.imag(), sum_im_, comp_im_);
  }
  CompensatedSum& operator+=(cplx z) {
    add(z);
    return *this;
  }
  cplx value() const { return {sum_re_ + comp_re_, sum_im_ + comp_im_}; }
  void reset() { *this = CompensatedSum{}; }

 private:
  static void add_part(double x, double& sum, double& comp) {
    double t = sum + x;
    if (std::fabs(sum) >= std::fabs(x))
      comp += (sum - t) + x;
    else
      comp += (x - t) + sum;
    sum = t;
  }

  double sum_re_ = 0.0, comp_re_ = 0.0;
  double sum_im_ = 0.0, comp_im_ = 0.0;
};

}  // namespace extcauchy
