#pragma once

#include <functional>

namespace ntv {

struct QuadResult {
  long double value = 0;
  long double error = 0;  // summed Gauss-Kronrod error estimates
};

// Adaptive Gauss-Kronrod (boost) on [a, b] split into equal panels of width
// at most `panel`.
QuadResult integrate(const std::function<long double(long double)>& f, long double a, long double b,
                     long double panel, long double rel_tol = 1e-15L);

// int_0^X sin^2 t / t^2 dt
QuadResult sinc2_integral(double X);
// Same integral with panels of half the width; the two should agree.
QuadResult sinc2_integral_half_step(double X);

// Logarithmic integral li(x) (principal value), x > 1, by quadrature of
// e^u/u in u = log t from u = log 2 plus the constant li(2).
long double li(long double x);
// Offset logarithmic integral Li(x) = int_2^x dt / log t.
long double offset_li(long double x);
// li(x) from Ramanujan's rapidly converging series; independent route.
long double li_series(long double x);
// li(2) = 1.04516378011749278484...
inline constexpr long double kLi2 = 1.045163780117492784844588889194613136522615578151L;

}  // namespace ntv
