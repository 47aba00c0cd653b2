#pragma once

#include "dcsit/types.hpp"

#include <string>

namespace dcsit {

enum class Scheme { RIA, TG, PSR3 };
enum class Regime { AI, AII, BI, BII, CI, CII, CIII, CIV };

const char* to_string(Scheme s);
const char* to_string(Regime r);
Scheme scheme_from_string(const std::string& s);

struct OutOfDomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// Antenna-ratio thresholds separating the regimes.
double rho_a(int L);              // L / (L^2 - L - 1)
double rho_b(int G, int K);       // (1 + a(G-1)) / (1 + a(G-2)), a = C(K-1, G-1)
double rho_x();                   // sqrt(249) - 15
double rho_y(int K);              // 36 (K-1) / (31 K - 36)
double rho_psr1();                // ~0.7545, cubic root threshold
double rho_psr2();                // (5 - sqrt(7)) / 3

double harmonic_tail(int K);      // 1/2 + 1/3 + ... + 1/K

/// Best known DoF-per-user upper bound; defined for rho >= 1/(K-1).
double outer_bound(int K, double rho);

struct Inner3 {
  double dof;
  Regime regime;
};
/// Achievable DoF per user for the 3-user channel; defined for rho > 1/2.
Inner3 inner_bound_3user(double rho);

struct InnerK {
  double dof;
  Scheme scheme;
  Regime regime;
};
/// Achievable DoF per user for the K-user channel; defined for rho > 1/K.
InnerK inner_bound_kuser(int K, double rho);

/// Orthogonal single-user transmission: min(rho, 1) / K.
double tdma_baseline(int K, double rho);

/// (outer - inner) / outer; zero for rho <= 1/(K-1) where no CSIT is needed.
double relative_gap(int K, double rho);

}  // namespace dcsit
