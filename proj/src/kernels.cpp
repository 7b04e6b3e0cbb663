#include "descartes/kernels.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <exception>
#include <limits>

#include "descartes/errors.hpp"
#include "descartes/euclid_flower.hpp"
#include "descartes/m_variables.hpp"
#include "descartes/solver.hpp"
#include "descartes/spinor_chain.hpp"

namespace descartes {

namespace {

constexpr std::size_t kMaxEnumerated = 40;

std::uint64_t subset_count(std::span<const double> m) {
  if (m.empty()) throw DomainError("empty m-vector");
  if (m.size() - 1 > kMaxEnumerated) {
    throw CapacityError("subset enumeration limited to 40 variables");
  }
  return std::uint64_t{1} << (m.size() - 1);
}

// Signed product for one subset mask over m_1 .. m_{n-1}; zero when the
// complement has even size.
double subset_term(std::span<const double> m, std::uint64_t mask) {
  const std::size_t vars = m.size() - 1;
  const std::size_t missing = vars - static_cast<std::size_t>(std::popcount(mask));
  if (missing % 2 == 0) return 0.0;
  double product = ((missing - 1) / 2) % 2 == 0 ? 1.0 : -1.0;
  for (std::size_t k = 0; k < vars; ++k) {
    if (mask & (std::uint64_t{1} << k)) product *= m[k + 1];
  }
  return product;
}

}  // namespace

double subset_sum_serial(std::span<const double> m) {
  const std::uint64_t count = subset_count(m);
  double sum = 0.0;
  for (std::uint64_t mask = 0; mask < count; ++mask) sum += subset_term(m, mask);
  return sum;
}

double subset_sum_parallel(std::span<const double> m) {
  const auto count = static_cast<std::int64_t>(subset_count(m));
  double sum = 0.0;
#pragma omp parallel for reduction(+ : sum) schedule(static)
  for (std::int64_t mask = 0; mask < count; ++mask) {
    sum += subset_term(m, static_cast<std::uint64_t>(mask));
  }
  return sum;
}

FlowerCheck check_flower(std::span<const double> petals) {
  constexpr double kAngleTol = 1e-12;
  const std::size_t n = petals.size();
  std::vector<double> radii(n);
  std::transform(petals.begin(), petals.end(), radii.begin(),
                 [](double k) { return 1.0 / k; });

  const FlowerLayout layout = layout_flower(radii, kAngleTol);
  FlowerCheck check;
  check.kappa = 1.0 / layout.central.r();

  auto normalized_at = [&](double central) {
    std::vector<double> k(n);
    std::transform(petals.begin(), petals.end(), k.begin(),
                   [central](double v) { return v / central; });
    return k;
  };
  const MVector m = m_from_normalized(normalized_at(check.kappa));
  check.relative_residual = theorem_sides_subset(m).relative_residual();

  check.perturbed_residual = std::numeric_limits<double>::infinity();
  for (double factor : {1.01, 0.99}) {
    const double r =
        std::abs(theorem_residual_subset(m_from_normalized(normalized_at(check.kappa * factor))));
    check.perturbed_residual = std::min(check.perturbed_residual, r);
  }

  const FlowerLayout unit = normalize_layout(layout);
  for (const Circle& p : unit.petals) {
    const Circle image = invert_in_unit_circle(p);
    check.inversion_error = std::max(
        check.inversion_error, std::abs((image.curvature() - p.curvature()) - 2.0));
  }

  const double polished = solve_central_curvature(petals, 1e-9).polished;
  const SpinorChain chain = spinor_recursion(m_from_normalized(normalized_at(polished)));
  check.closure_bracket = std::abs(closure_residuals(chain).bracket);
  check.flat_residual =
      std::abs(flat_flower_residual(flatten_chain(chain).flat_curvatures()));
  const std::vector<double> areas = parallelogram_areas(chain);
  for (std::size_t j = 0; j + 1 < areas.size(); ++j) {
    check.parallelogram_error = std::max(check.parallelogram_error, std::abs(areas[j] - 1.0));
  }
  check.closing_area = areas.back();
  return check;
}

std::vector<FlowerCheck> check_flowers_serial(
    std::span<const std::vector<double>> petal_sets) {
  std::vector<FlowerCheck> out;
  out.reserve(petal_sets.size());
  for (const auto& petals : petal_sets) out.push_back(check_flower(petals));
  return out;
}

std::vector<FlowerCheck> check_flowers_parallel(
    std::span<const std::vector<double>> petal_sets) {
  const auto count = static_cast<std::int64_t>(petal_sets.size());
  std::vector<FlowerCheck> out(petal_sets.size());
  std::vector<std::exception_ptr> errors(petal_sets.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t i = 0; i < count; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    try {
      out[idx] = check_flower(petal_sets[idx]);
    } catch (...) {
      errors[idx] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

}  // namespace descartes
