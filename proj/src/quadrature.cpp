#include "ntv/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <numbers>

#include "ntv/errors.hpp"

namespace ntv {

QuadResult integrate(const std::function<long double(long double)>& f, long double a, long double b,
                     long double panel, long double rel_tol) {
  using GK = boost::math::quadrature::gauss_kronrod<long double, 31>;
  QuadResult r;
  if (b <= a) return r;
  const long double n_raw = std::ceil((b - a) / panel);
  const long n = n_raw < 1 ? 1 : static_cast<long>(n_raw);
  const long double w = (b - a) / n;
  for (long i = 0; i < n; ++i) {
    const long double lo = a + w * i;
    const long double hi = (i + 1 == n) ? b : a + w * (i + 1);
    long double err = 0;
    r.value += GK::integrate(f, lo, hi, 15, rel_tol, &err);
    r.error += err;
  }
  return r;
}

namespace {
long double sinc2(long double t) {
  if (std::fabs(t) < 1e-4L) return 1.0L - t * t / 3.0L;
  const long double s = std::sin(t) / t;
  return s * s;
}
}  // namespace

QuadResult sinc2_integral(double X) {
  return integrate(sinc2, 0.0L, static_cast<long double>(X), std::numbers::pi_v<long double>);
}

QuadResult sinc2_integral_half_step(double X) {
  return integrate(sinc2, 0.0L, static_cast<long double>(X), std::numbers::pi_v<long double> / 2);
}

long double li(long double x) {
  if (!(x > 1.0L)) throw DomainError("li requires x > 1");
  const long double l2 = std::numbers::ln2_v<long double>;
  const long double lx = std::log(x);
  auto f = [](long double u) { return std::exp(u) / u; };
  if (lx >= l2) return kLi2 + integrate(f, l2, lx, 1.0L).value;
  return kLi2 - integrate(f, lx, l2, 1.0L).value;  // singular near u = 0, x close to 1
}

long double offset_li(long double x) {
  if (!(x >= 2.0L)) throw DomainError("offset_li requires x >= 2");
  const long double l2 = std::numbers::ln2_v<long double>;
  auto f = [](long double u) { return std::exp(u) / u; };
  return integrate(f, l2, std::log(x), 1.0L).value;
}

long double li_series(long double x) {
  if (!(x > 1.0L)) throw DomainError("li_series requires x > 1");
  const long double L = std::log(x);
  long double sum = 0.0L;
  long double term = 1.0L;  // (L^n / (n! 2^(n-1))) built incrementally
  long double inner = 0.0L;
  for (int n = 1; n < 2000; ++n) {
    term *= (n == 1) ? L : L / (2.0L * n);
    if ((n - 1) % 2 == 0) inner += 1.0L / n;  // adds 1/(2k+1) once k = (n-1)/2 enters
    const long double t = ((n % 2) ? term : -term) * inner;
    sum += t;
    if (n > 2 * L && std::fabs(t) < 1e-22L * std::fabs(sum)) break;
  }
  return std::numbers::egamma_v<long double> + std::log(L) + std::sqrt(x) * sum;
}

}  // namespace ntv
