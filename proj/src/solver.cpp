#include "descartes/solver.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/math/tools/roots.hpp>

#include "descartes/errors.hpp"
#include "descartes/euclid_flower.hpp"
#include "descartes/m_variables.hpp"

namespace descartes {

namespace {

TheoremSides sides_at(std::span<const double> petals, double central) {
  std::vector<double> normalized(petals.size());
  std::transform(petals.begin(), petals.end(), normalized.begin(),
                 [central](double k) { return k / central; });
  return theorem_sides_subset(m_from_normalized(normalized));
}

}  // namespace

double theorem_relative_residual(std::span<const double> petals, double central) {
  return sides_at(petals, central).relative_residual();
}

CentralCurvature solve_central_curvature(std::span<const double> petals, double tol) {
  if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
  FlowerSpec{std::vector<double>(petals.begin(), petals.end()), std::nullopt}.validate();

  std::vector<double> radii(petals.size());
  std::transform(petals.begin(), petals.end(), radii.begin(),
                 [](double k) { return 1.0 / k; });
  const double radius = solve_central_radius(radii, tol);

  CentralCurvature out;
  out.kappa = 1.0 / radius;
  const TheoremSides sides = sides_at(petals, out.kappa);
  out.residual = sides.residual();
  out.relative_residual = sides.relative_residual();
  if (!(out.relative_residual < tol)) {
    throw NumericError("theorem residual " + std::to_string(out.relative_residual) +
                       " at the geometric root exceeds tolerance");
  }

  // Independent root of the theorem residual alone, bracketed at +-10%.
  auto f = [&petals](double k) { return sides_at(petals, k).residual(); };
  double lo = 0.9 * out.kappa;
  double hi = 1.1 * out.kappa;
  const double f_lo = f(lo);
  const double f_hi = f(hi);
  if (f_lo == 0.0) {
    out.polished = lo;
  } else if (f_hi == 0.0) {
    out.polished = hi;
  } else {
    if ((f_lo > 0.0) == (f_hi > 0.0)) {
      throw NumericError(
          "theorem residual does not change sign within 10% of the geometric root");
    }
    std::uintmax_t max_iter = 200;
    const auto [a, b] = boost::math::tools::toms748_solve(
        f, lo, hi, f_lo, f_hi, boost::math::tools::eps_tolerance<double>(), max_iter);
    out.polished = 0.5 * (a + b);
  }
  out.agreement = std::abs(out.kappa - out.polished) / out.kappa;
  if (!(out.agreement <= tol)) {
    throw NumericError("geometric and theorem roots disagree by " +
                       std::to_string(out.agreement));
  }
  return out;
}

}  // namespace descartes
