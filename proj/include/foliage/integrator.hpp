#pragma once

#include <variant>
#include <vector>

#include "foliage/deformation.hpp"
#include "foliage/period.hpp"
#include "foliage/relative_cohomology.hpp"

namespace foliage {

/// F_t = sum_j t^j coeffs[j] with coeffs[0] = f.
struct FirstIntegralSeries {
  std::vector<Polynomial> coeffs;

  std::size_t order() const { return coeffs.size() - 1; }
  /// d_x F_t as a series of 1-forms.
  DeformationSeries differential() const;
  friend bool operator==(const FirstIntegralSeries&, const FirstIntegralSeries&) = default;
};

/// The first order whose decomposition has a logarithmic part.
struct Obstruction {
  std::size_t order = 0;
  GaussianRational a;
  Polynomial h;
  std::vector<GaussianRational> lambda;
  /// Periods of omega_order over the supplied cycles (empty if none given).
  std::vector<CyclePeriod> periods;
};

using ReconstructionResult = std::variant<FirstIntegralSeries, Obstruction>;

/// Order-by-order reconstruction of a polynomial first integral F_t with
/// d_x F_t = omega_t. Requires omega_0 = df (HypothesisViolation) and
/// deg omega_j <= nu for every j (DegreeBound). A failed decomposition is
/// reported as DecompositionFailure with the underlying certificate.
ReconstructionResult reconstruct_first_integral(const DeformationSeries& w, const FactoredFiber& fiber,
                                                const std::vector<Cycle>& cycles = {},
                                                const QuadratureOptions& opts = {});

/// omega_t = d(f + t h_tilde).
struct ExactCase {
  Polynomial h_tilde;
  FirstIntegralSeries first_integral;
};

/// omega_t = sigma^*(alpha_t) with sigma = (f_1, f_2) and
/// alpha_t = (1 + t mu) d(xy) + t d(P(x) + Q(y)) + t lambda y dx.
struct PullbackCase {
  GaussianRational mu;
  GaussianRational lambda;
  Polynomial P;  // in {x}
  Polynomial Q;  // in {y}
  std::vector<Polynomial> sigma;
  DeformationSeries alpha;  // in {x, y}
};

using ClassificationResult = std::variant<ExactCase, PullbackCase>;

/// Classifies omega_t = df + t omega_1 for f = f_1 f_2. Every returned case
/// has been re-verified exactly. Throws DegreeBound, NotIntegrable (with the
/// defect), FactorizationFailure or AnsatzFailure.
ClassificationResult classify_degree_one(const FactoredFiber& fiber, const PForm& omega1);

/// Re-emits omega_t from a classification.
DeformationSeries emit(const ClassificationResult& result);

/// Pullback of a 1-form under z -> t z.
PForm scaling_pullback(const PForm& omega, const GaussianRational& t);

/// For a closed homogeneous 1-form of coefficient degree m, the homogeneous
/// P of degree m+1 with dP = omega (via the Euler identity).
Polynomial homogeneous_potential(const PForm& omega);

/// omega_t = t^{-(nu+1)} sigma_t^*(Omega) = dP + sum_{j > nu} t^{j-nu} Omega_j,
/// truncated at order K. The series is polynomial in t when K reaches the top
/// degree of Omega.
DeformationSeries rescale_deformation(const PForm& omega, int nu, std::size_t order);

enum class RadialKind { ZeroContraction, ClosedQuotient, Neither };

struct RadialResult {
  RadialKind kind = RadialKind::Neither;
  Polynomial contraction;
  /// g d omega - dg ^ omega; zero unless kind == Neither.
  PForm defect;
};

/// Dichotomy for homogeneous integrable 1-forms: omega(R) = 0, or
/// omega / omega(R) is closed.
RadialResult radial_test(const PForm& omega);

const char* to_string(RadialKind kind);

}  // namespace foliage
