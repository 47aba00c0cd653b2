#pragma once

#include <Eigen/Dense>

#include <complex>
#include <numeric>
#include <stdexcept>
#include <string>

namespace dcsit {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Index = Eigen::Index;

/// Relative singular-value cutoff used for every numerical rank decision.
struct Tolerance {
  double rel_eps = 1e-10;

  Tolerance() = default;
  explicit Tolerance(double eps) : rel_eps(eps) {
    if (!(eps > 0.0 && eps < 1.0))
      throw std::invalid_argument("Tolerance: rel_eps must be in (0,1)");
  }
};

/// Exact fraction for DoF bookkeeping. Always kept normalized with den > 0.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n, long long d) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    if (den < 0) { num = -num; den = -den; }
    const long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
  }

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  // a/b vs c/d by cross multiplication; magnitudes here stay far below overflow.
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
  }
};

/// Antenna configuration of the K-user interference channel.
struct Dims {
  int K = 0;      // transmitter-receiver pairs
  int M = 0;      // transmit antennas
  int N = 0;      // receive antennas

  Dims() = default;
  Dims(int k, int m, int n) : K(k), M(m), N(n) {
    if (K < 2 || M < 1 || N < 1)
      throw std::invalid_argument("Dims: need K >= 2, M >= 1, N >= 1");
  }

  double rho() const { return static_cast<double>(M) / static_cast<double>(N); }
};

struct DimensionMismatchError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DegenerateEnsembleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline long long ceil_div(long long a, long long b) {
  return (a + b - 1) / b;  // a >= 0, b > 0
}

inline long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace dcsit
