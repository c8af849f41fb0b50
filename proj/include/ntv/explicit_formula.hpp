#pragma once

#include <complex>
#include <functional>

#include "ntv/sieve.hpp"
#include "ntv/zeros.hpp"

namespace ntv {

struct FormulaEvaluation {
  double x = 0, T = 0;
  double main_term = 0;       // x
  double zero_sum = 0;        // 2 Re sum_{0<gamma<T} x^rho / rho
  double constant_terms = 0;  // log 2pi + log(1 - x^-2) / 2
  double predicted_psi = 0;
  double exact_psi = 0;
  double residual = 0;        // exact - predicted
  double error_budget = 0;    // 2 x log^2 x / T
  std::size_t zeros_used = 0;
  bool half_odd = false;
  bool empirical_regime = true;  // x < e^60, below the proven range of the error term
  bool within_budget() const { return std::abs(residual) < error_budget; }
};

// sum over loaded zeros with 0 < gamma < gmax of 2 Re term(rho), rho = 1/2 + i gamma;
// blocked pairwise reduction, independent of thread count.
double sum_over_zeros(const ZeroTable& z, double gmax,
                      const std::function<std::complex<double>(double gamma)>& term);

FormulaEvaluation truncated_psi(double x, double T, const ZeroTable& z, const SieveOptions& opt = {});

// psi_1(x) = sum_{n <= x} (x - n) Lambda(n), exact by sieve.
double psi1(double x, const SieveOptions& opt = {});

struct Psi1Formula {
  double value = 0;       // x^2/2 - sum_rho x^(rho+1)/(rho(rho+1)) - x log 2pi
  double zero_sum = 0;    // the sum over loaded zeros (both half planes)
  double tail_slack = 0;  // bound on the omitted zeros above the horizon
  double epsilon_bound = 12.0 / 5.0;
};
Psi1Formula psi1_formula(double x, const ZeroTable& z);

struct WeightedSum {
  double exact = 0;        // sum_{x-h<n<x+h} Lambda(n) (1 - |n-x|/h)
  double formula = 0;      // h - Sigma/h with Sigma over loaded zeros
  double sigma = 0;
  double tail_slack = 0;   // bound on omitted zeros, already divided by h
  double epsilon_bound = 0;  // 48 / (5h)
};
// Exact side only.
double weighted_interval_exact(double x, double h);
WeightedSum weighted_interval_sum(double x, double h, const ZeroTable& z);

// Sigma restricted to |gamma| < gmax (Sigma_1 when gmax = alpha x / h).
double interval_zero_sum(double x, double h, const ZeroTable& z, double gmax);

double sigma1_bound(double x, double h, double alpha);
double sigma2_bound(double x, double h, double alpha);
// (2/pi) int_0^{alpha/2} sin^2 t/t^2 dt * h sqrt(x) log(x/h), without the O(alpha h sqrt x) term
double sigma1_refined(double x, double h, double alpha);

}  // namespace ntv
