#include "foliage/integrator.hpp"

#include <algorithm>

#include "foliage/errors.hpp"

namespace foliage {

DeformationSeries FirstIntegralSeries::differential() const {
  std::vector<PForm> out;
  for (const auto& c : coeffs) out.push_back(PForm::differential(c));
  return DeformationSeries(std::move(out));
}

namespace {

void require_df(const DeformationSeries& w, const Polynomial& f) {
  PForm df = PForm::differential(f);
  if (!(w.coeffs().front() == df))
    throw Error(ErrorKind::HypothesisViolation, "omega_0 is not df", (w.coeffs().front() - df).to_string());
}

}  // namespace

ReconstructionResult reconstruct_first_integral(const DeformationSeries& w, const FactoredFiber& fiber,
                                                const std::vector<Cycle>& cycles, const QuadratureOptions& opts) {
  require_one_forms(w);
  require_same_context(w.vars(), fiber.vars(), "first integral");
  const Polynomial& f = fiber.product();
  require_df(w, f);
  const int nu = fiber.nu();
  for (std::size_t j = 1; j <= w.order(); ++j)
    if (w.coeffs()[j].degree() > nu)
      throw Error(ErrorKind::DegreeBound, "deg omega_" + std::to_string(j) + " = " + std::to_string(w.coeffs()[j].degree()) +
                                              " exceeds deg omega_0 = " + std::to_string(nu));

  FirstIntegralSeries F{{f}};
  for (std::size_t j = 1; j <= w.order(); ++j) {
    const PForm& wj = w.coeffs()[j];
    Decomposition d;
    try {
      d = decompose(wj, fiber);
    } catch (const Error& e) {
      throw Error(ErrorKind::DecompositionFailure, "order " + std::to_string(j) + ": " + e.what(), e.witness());
    }
    bool logarithmic = std::any_of(d.lambda.begin(), d.lambda.end(), [](const auto& l) { return !l.is_zero(); });
    if (logarithmic) {
      Obstruction ob{j, d.a, d.h, d.lambda, {}};
      for (const auto& gamma : cycles) {
        PeriodValue pv = period(wj, gamma, opts, &f);
        ob.periods.push_back({pv.value, pv.error, pv.value / gamma.fiber_value()});
      }
      return ob;
    }
    F.coeffs.push_back(f * d.a + d.h);
  }

  DeformationSeries dF = F.differential();
  for (std::size_t j = 0; j <= w.order(); ++j)
    if (!(dF.coeffs()[j] == w.coeffs()[j]))
      throw Error(ErrorKind::DecompositionFailure, "d F_t != omega_t at order " + std::to_string(j));
  return F;
}

namespace {

Variables plane_vars() { return {"x", "y"}; }

PForm alpha_first_order(const GaussianRational& mu, const GaussianRational& lambda, const Polynomial& P,
                        const Polynomial& Q) {
  const Variables v = plane_vars();
  Polynomial x = Polynomial::variable(v, 0), y = Polynomial::variable(v, 1);
  Polynomial P2 = P.compose(std::vector<Polynomial>{x});
  Polynomial Q2 = Q.compose(std::vector<Polynomial>{y});
  PForm alpha = mu * PForm::differential(x * y) + PForm::differential(P2 + Q2);
  alpha += PForm::basis(v, {0}, y * lambda);
  return alpha;
}

}  // namespace

ClassificationResult classify_degree_one(const FactoredFiber& fiber, const PForm& omega1) {
  if (fiber.rank() != 1) throw Error(ErrorKind::InvalidArgument, "degree-one classification needs exactly two factors");
  if (omega1.p() != 1) throw Error(ErrorKind::InvalidArgument, "omega_1 must be a 1-form");
  require_same_context(omega1.vars(), fiber.vars(), "classify");
  const Polynomial& f = fiber.product();
  const int nu = fiber.nu();
  if (omega1.degree() > nu)
    throw Error(ErrorKind::DegreeBound,
                "deg omega_1 = " + std::to_string(omega1.degree()) + " exceeds deg df = " + std::to_string(nu));

  PForm d_omega1 = exterior_derivative(omega1);
  PForm first = wedge(PForm::differential(f), d_omega1);
  if (!first.is_zero()) throw Error(ErrorKind::NotIntegrable, "df ^ d omega_1 != 0", first.to_string());
  PForm second = wedge(omega1, d_omega1);
  if (!second.is_zero()) throw Error(ErrorKind::NotIntegrable, "omega_1 ^ d omega_1 != 0", second.to_string());

  Decomposition d = decompose(omega1, fiber);
  const GaussianRational lambda = d.lambda.at(0);

  if (lambda.is_zero()) {
    ExactCase exact;
    exact.h_tilde = f * d.a + d.h;
    exact.first_integral = FirstIntegralSeries{{f, exact.h_tilde}};
    if (!(PForm::differential(exact.h_tilde) == omega1))
      throw Error(ErrorKind::DecompositionFailure, "exact case failed re-verification");
    return exact;
  }

  const Polynomial& f1 = fiber.factors()[0];
  const Polynomial& f2 = fiber.factors()[1];
  PForm factorization = wedge(wedge(PForm::differential(d.h), PForm::differential(f1)), PForm::differential(f2));
  if (!factorization.is_zero())
    throw Error(ErrorKind::FactorizationFailure, "dh ^ df_1 ^ df_2 != 0", factorization.to_string());

  // h = sum c_ij f1^i f2^j over (i, j) != (0, 0) with i nu1 + j nu2 <= nu + 1.
  const int nu1 = f1.degree(), nu2 = f2.degree();
  std::vector<std::pair<unsigned, unsigned>> exponents;
  std::vector<Polynomial> basis;
  for (int i = 0; i * nu1 <= nu + 1; ++i)
    for (int j = 0; i * nu1 + j * nu2 <= nu + 1; ++j) {
      if (i == 0 && j == 0) continue;
      exponents.emplace_back(i, j);
      basis.push_back(f1.pow(i) * f2.pow(j));
    }
  std::map<Monomial, std::size_t, GrlexLess> row_of;
  auto row = [&](const Monomial& m) { return row_of.try_emplace(m, row_of.size()).first->second; };
  for (const auto& [m, _] : d.h.terms()) row(m);
  for (const auto& b : basis)
    for (const auto& [m, _] : b.terms()) row(m);
  Matrix a(row_of.size(), std::vector<GaussianRational>(basis.size()));
  std::vector<GaussianRational> rhs(row_of.size());
  for (std::size_t col = 0; col < basis.size(); ++col)
    for (const auto& [m, c] : basis[col].terms()) a[row_of.at(m)][col] = c;
  for (const auto& [m, c] : d.h.terms()) rhs[row_of.at(m)] = c;
  LinearSolution sol = solve_exact(std::move(a), std::move(rhs));
  if (!sol.consistent)
    throw Error(ErrorKind::AnsatzFailure, "h is not a polynomial in f_1, f_2 within the degree bound", d.h.to_string());

  PullbackCase pb;
  pb.lambda = lambda;
  pb.mu = d.a;
  pb.P = Polynomial(Variables{"x"});
  pb.Q = Polynomial(Variables{"y"});
  for (std::size_t k = 0; k < exponents.size(); ++k) {
    const auto [i, j] = exponents[k];
    const GaussianRational& c = sol.x[k];
    if (c.is_zero()) continue;
    if (i > 0 && j > 0) {
      // Only (1, 1) fits the degree bound; it is a multiple of d(xy).
      pb.mu += c;
    } else if (j == 0) {
      pb.P.add_term(Monomial(std::vector<unsigned>{i}), c);
    } else {
      pb.Q.add_term(Monomial(std::vector<unsigned>{j}), c);
    }
  }
  pb.sigma = {f1, f2};
  const Variables v = plane_vars();
  pb.alpha = DeformationSeries(
      {PForm::differential(Polynomial::variable(v, 0) * Polynomial::variable(v, 1)), alpha_first_order(pb.mu, pb.lambda, pb.P, pb.Q)});

  if (!(pullback(pb.sigma, pb.alpha.coeffs()[0]) == PForm::differential(f)) ||
      !(pullback(pb.sigma, pb.alpha.coeffs()[1]) == omega1))
    throw Error(ErrorKind::DecompositionFailure, "pullback case failed re-verification");
  return pb;
}

DeformationSeries emit(const ClassificationResult& result) {
  if (const auto* exact = std::get_if<ExactCase>(&result)) return exact->first_integral.differential();
  const auto& pb = std::get<PullbackCase>(result);
  return DeformationSeries({pullback(pb.sigma, pb.alpha.coeffs()[0]), pullback(pb.sigma, pb.alpha.coeffs()[1])});
}

PForm scaling_pullback(const PForm& omega, const GaussianRational& t) {
  std::vector<Polynomial> sigma;
  for (std::size_t i = 0; i < omega.nvars(); ++i) sigma.push_back(Polynomial::variable(omega.vars(), i) * t);
  return pullback(sigma, omega);
}

Polynomial homogeneous_potential(const PForm& omega) {
  if (omega.p() != 1 || !omega.is_homogeneous() || omega.is_zero())
    throw Error(ErrorKind::InvalidArgument, "potential needs a nonzero homogeneous 1-form");
  if (!exterior_derivative(omega).is_zero()) throw Error(ErrorKind::InvalidArgument, "form is not closed");
  return radial_contraction(omega) * GaussianRational::frac(1, omega.degree() + 1);
}

DeformationSeries rescale_deformation(const PForm& omega, int nu, std::size_t order) {
  if (omega.p() != 1) throw Error(ErrorKind::InvalidArgument, "rescaling needs a 1-form");
  if (nu < 0) throw Error(ErrorKind::InvalidArgument, "nu must be non-negative");
  auto parts = omega.homogeneous_components();
  if (parts.empty() || parts.begin()->first != nu)
    throw Error(ErrorKind::InvalidArgument, "lowest homogeneous part is not of degree nu = " + std::to_string(nu));
  const PForm& lowest = parts.begin()->second;
  // Polynomial 1-forms are exact iff closed (symmetric Jacobian).
  if (!exterior_derivative(lowest).is_zero())
    throw Error(ErrorKind::InvalidArgument, "lowest homogeneous part is not exact", lowest.to_string());

  std::vector<PForm> coeffs;
  for (std::size_t k = 0; k <= order; ++k) {
    auto it = parts.find(nu + static_cast<int>(k));
    coeffs.push_back(it == parts.end() ? PForm::zero(omega.vars(), 1) : it->second);
  }
  bool complete = omega.degree() <= nu + static_cast<int>(order);
  return DeformationSeries(std::move(coeffs), complete);
}

RadialResult radial_test(const PForm& omega) {
  if (omega.p() != 1) throw Error(ErrorKind::InvalidArgument, "radial test needs a 1-form");
  if (!omega.is_homogeneous()) throw Error(ErrorKind::InvalidArgument, "radial test needs a homogeneous 1-form");
  PForm d_omega = exterior_derivative(omega);
  PForm integrability = wedge(omega, d_omega);
  if (!integrability.is_zero()) throw Error(ErrorKind::NotIntegrable, "omega ^ d omega != 0", integrability.to_string());

  RadialResult out;
  out.contraction = radial_contraction(omega);
  out.defect = PForm::zero(omega.vars(), 2);
  if (out.contraction.is_zero()) {
    out.kind = RadialKind::ZeroContraction;
    return out;
  }
  out.defect = out.contraction * d_omega - wedge(PForm::differential(out.contraction), omega);
  out.kind = out.defect.is_zero() ? RadialKind::ClosedQuotient : RadialKind::Neither;
  return out;
}

const char* to_string(RadialKind kind) {
  switch (kind) {
    case RadialKind::ZeroContraction: return "ZeroContraction";
    case RadialKind::ClosedQuotient: return "ClosedQuotient";
    case RadialKind::Neither: return "Neither";
  }
  return "Neither";
}

}  // namespace foliage
