#include "foliage/relative_cohomology.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "foliage/errors.hpp"

namespace foliage {

namespace {

using Dense = std::vector<GaussianRational>;

void trim(Dense& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Dense remainder(Dense a, const Dense& b) {
  GaussianRational inv = b.back().inverse();
  while (a.size() >= b.size()) {
    GaussianRational factor = a.back() * inv;
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

// Degree of gcd(a, b) for univariate polynomials, coefficients low to high.
int gcd_degree(Dense a, Dense b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Dense r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return static_cast<int>(a.size()) - 1;
}

Dense restrict_to_line(const Polynomial& f, const std::vector<long>& base, const std::vector<long>& dir) {
  Variables s{"s"};
  std::vector<Polynomial> line;
  for (std::size_t i = 0; i < base.size(); ++i)
    line.push_back(Polynomial::constant(s, base[i]) + Polynomial::variable(s, 0) * GaussianRational(dir[i]));
  Polynomial g = f.compose(line);
  Dense out(std::max(g.degree(), 0) + 1);
  for (const auto& [m, c] : g.terms()) out[m[0]] = c;
  trim(out);
  return out;
}

Matrix default_generator_matrix(std::size_t factors) {
  Matrix m(factors - 1, std::vector<GaussianRational>(factors));
  for (std::size_t j = 0; j + 1 < factors; ++j) m[j][j] = 1;
  return m;
}

std::string describe_row(const Variables& vars, std::size_t component, const Monomial& m) {
  std::ostringstream os;
  os << "coefficient of " << Polynomial::monomial(vars, m).to_string() << " in the d" << vars[component] << " component";
  return os.str();
}

}  // namespace

bool is_reduced(const Polynomial& f) {
  if (f.is_zero()) return false;
  if (f.is_constant()) return true;
  const int deg = f.degree();
  std::mt19937_64 rng(0x5eedf00dULL);
  std::uniform_int_distribution<long> coord(-7, 7);
  for (int attempt = 0; attempt < 8; ++attempt) {
    std::vector<long> base(f.nvars()), dir(f.nvars());
    for (auto& b : base) b = coord(rng);
    for (auto& d : dir) d = coord(rng);
    Dense g = restrict_to_line(f, base, dir);
    if (static_cast<int>(g.size()) - 1 != deg) continue;
    Dense dg;
    for (std::size_t k = 1; k < g.size(); ++k) dg.push_back(g[k] * GaussianRational(static_cast<long>(k)));
    if (gcd_degree(g, dg) == 0) return true;
  }
  return false;
}

FactoredFiber::FactoredFiber(std::vector<Polynomial> factors)
    : FactoredFiber(factors, factors.empty() ? Matrix{} : default_generator_matrix(factors.size())) {
  default_generators_ = true;
}

FactoredFiber::FactoredFiber(std::vector<Polynomial> factors, Matrix generator_matrix)
    : factors_(std::move(factors)), generators_(std::move(generator_matrix)), default_generators_(false) {
  if (factors_.empty()) throw Error(ErrorKind::FiberValidation, "fiber needs at least one factor");
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    const auto& fk = factors_[k];
    require_same_context(factors_.front().vars(), fk.vars(), "fiber factors");
    if (fk.is_constant()) throw Error(ErrorKind::FiberValidation, "factor " + std::to_string(k + 1) + " is constant");
    if (!fk.is_homogeneous())
      throw Error(ErrorKind::FiberValidation, "factor " + std::to_string(k + 1) + " is not homogeneous", fk.to_string());
  }
  product_ = Polynomial::constant(vars(), 1);
  for (const auto& fk : factors_) product_ *= fk;
  if (!is_reduced(product_))
    throw Error(ErrorKind::FiberValidation, "f is not reduced (repeated factor)", product_.to_string());

  const std::size_t r = rank();
  if (generators_.size() != r)
    throw Error(ErrorKind::FiberValidation, "generator matrix needs " + std::to_string(r) + " rows");
  for (const auto& row : generators_)
    if (row.size() != r + 1) throw Error(ErrorKind::FiberValidation, "generator rows need one entry per factor");
  if (r > 0) {
    Matrix independence;
    independence.emplace_back(r + 1, GaussianRational(1));
    for (const auto& row : generators_) independence.push_back(row);
    if (determinant(independence).is_zero())
      throw Error(ErrorKind::FiberValidation, "generators are not independent (singular determinant)");
  }
}

LogForm FactoredFiber::generator(std::size_t j) const {
  std::vector<LogForm::Term> terms;
  for (std::size_t k = 0; k < factors_.size(); ++k)
    if (!generators_.at(j)[k].is_zero()) terms.push_back({generators_[j][k], factors_[k]});
  return LogForm(std::move(terms));
}

PForm FactoredFiber::cleared_generator(std::size_t j) const {
  // f * sum_k lambda_k df_k / f_k = sum_k lambda_k (f / f_k) df_k.
  PForm r = PForm::zero(vars(), 1);
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    const GaussianRational& lambda = generators_.at(j)[k];
    if (lambda.is_zero()) continue;
    Polynomial others = Polynomial::constant(vars(), lambda);
    for (std::size_t i = 0; i < factors_.size(); ++i)
      if (i != k) others *= factors_[i];
    r += others * PForm::differential(factors_[k]);
  }
  return r;
}

RelativeClosedness relatively_closed(const PForm& omega, const Polynomial& f) {
  if (omega.p() != 1) throw Error(ErrorKind::InvalidArgument, "relative closedness needs a 1-form");
  require_same_context(omega.vars(), f.vars(), "relative closedness");
  RelativeClosedness out;
  out.defect = wedge(exterior_derivative(omega), PForm::differential(f));
  out.closed = out.defect.is_zero();
  return out;
}

Decomposition decompose(const PForm& omega, const FactoredFiber& fiber) {
  if (omega.p() != 1) throw Error(ErrorKind::InvalidArgument, "decompose needs a 1-form");
  require_same_context(omega.vars(), fiber.vars(), "decompose");
  const int nu = fiber.nu();
  const Polynomial& f = fiber.product();
  if (omega.degree() > nu)
    throw Error(ErrorKind::DegreeBound,
                "deg omega = " + std::to_string(omega.degree()) + " exceeds nu = " + std::to_string(nu));
  if (auto rc = relatively_closed(omega, f); !rc.closed)
    throw Error(ErrorKind::NotRelativelyClosed, "d omega ^ df != 0", rc.defect.to_string());

  const std::size_t n = omega.nvars();
  const std::size_t r = fiber.rank();

  // Rows: (component i, monomial of degree <= nu).
  const auto row_monomials = monomials_up_to(n, nu);
  std::map<Monomial, std::size_t, GrlexLess> row_of;
  for (std::size_t k = 0; k < row_monomials.size(); ++k) row_of.emplace(row_monomials[k], k);
  const std::size_t rows = n * row_monomials.size();

  // Columns: a, lambda_1..lambda_r, then h over monomials of degree 1..nu+1
  // with the leading monomial of f last so elimination leaves it free.
  const Monomial& pinned = f.leading_monomial();
  std::vector<Monomial> h_monomials;
  for (auto& m : monomials_up_to(n, nu + 1, 1))
    if (!(m == pinned)) h_monomials.push_back(std::move(m));
  h_monomials.push_back(pinned);

  std::vector<PForm> columns;
  columns.push_back(PForm::differential(f));
  for (std::size_t j = 0; j < r; ++j) columns.push_back(fiber.cleared_generator(j));
  for (const auto& m : h_monomials) columns.push_back(PForm::differential(Polynomial::monomial(f.vars(), m)));

  auto scatter = [&](const PForm& form, auto&& put) {
    for (const auto& [index, c] : form.components())
      for (const auto& [m, coeff] : c.terms()) put(index[0] * row_monomials.size() + row_of.at(m), coeff);
  };

  Matrix a(rows, std::vector<GaussianRational>(columns.size()));
  for (std::size_t col = 0; col < columns.size(); ++col)
    scatter(columns[col], [&](std::size_t row, const GaussianRational& c) { a[row][col] = c; });
  std::vector<GaussianRational> b(rows);
  scatter(omega, [&](std::size_t row, const GaussianRational& c) { b[row] = c; });

  LinearSolution sol = solve_exact(std::move(a), std::move(b));
  if (!sol.consistent) {
    std::size_t row = *sol.inconsistent_row;
    throw Error(ErrorKind::NoSolution, "decomposition system is inconsistent",
                describe_row(f.vars(), row / row_monomials.size(), row_monomials[row % row_monomials.size()]));
  }

  Decomposition d;
  d.a = sol.x[0];
  d.lambda.assign(sol.x.begin() + 1, sol.x.begin() + 1 + static_cast<std::ptrdiff_t>(r));
  d.h = Polynomial(f.vars());
  for (std::size_t k = 0; k < h_monomials.size(); ++k) d.h.add_term(h_monomials[k], sol.x[1 + r + k]);
  d.kernel_dim = sol.kernel_dim;

  if (!(reassemble(d, fiber) == omega))
    throw Error(ErrorKind::DecompositionFailure, "reconstruction identity failed after solve");
  return d;
}

PForm reassemble(const Decomposition& d, const FactoredFiber& fiber) {
  PForm r = d.a * PForm::differential(fiber.product()) + PForm::differential(d.h);
  for (std::size_t j = 0; j < d.lambda.size(); ++j) r += d.lambda[j] * fiber.cleared_generator(j);
  return r;
}

std::optional<GaussianRational> divisibility_lemma_check(const Polynomial& h, const Polynomial& f) {
  require_same_context(h.vars(), f.vars(), "divisibility check");
  if (f.is_zero() || !f.is_homogeneous() || !h.is_homogeneous() || (!h.is_zero() && h.degree() != f.degree()))
    throw Error(ErrorKind::InvalidArgument, "h and f must be homogeneous of the same degree");
  PForm wedge_form = wedge(PForm::differential(h), PForm::differential(f));
  for (const auto& [_, c] : wedge_form.components())
    if (!divides(f, c)) return std::nullopt;
  GaussianRational lambda = h.coefficient(f.leading_monomial()) / f.leading_coefficient();
  if (!(h == f * lambda))
    throw Error(ErrorKind::HypothesisViolation, "f divides dh ^ df but h is not a multiple of f; f is not reduced/coprime");
  return lambda;
}

namespace {

struct Gradient {
  std::vector<Polynomial> partials;
  std::vector<Complex> at(std::span<const Complex> x) const {
    std::vector<Complex> g;
    g.reserve(partials.size());
    for (const auto& p : partials) g.push_back(p.evaluate(x));
    return g;
  }
};

Gradient gradient_of(const Polynomial& f) {
  Gradient g;
  for (std::size_t i = 0; i < f.nvars(); ++i) g.partials.push_back(f.derivative(i));
  return g;
}

double norm2(const std::vector<Complex>& v) {
  double s = 0;
  for (const auto& z : v) s += std::norm(z);
  return s;
}

Complex hermitian(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  Complex s(0.0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * std::conj(b[i]);
  return s;
}

// Minimum-norm Newton iteration onto {g_k = 0 for all k}; returns true on
// convergence with x updated in place.
bool project(std::vector<Complex>& x, std::span<const Polynomial> eqs, std::span<const Gradient> grads) {
  const std::size_t m = eqs.size();
  for (int iter = 0; iter < 60; ++iter) {
    std::vector<Complex> F(m);
    std::vector<std::vector<Complex>> J(m);
    double residual = 0;
    for (std::size_t k = 0; k < m; ++k) {
      F[k] = eqs[k].evaluate(x);
      J[k] = grads[k].at(x);
      residual += std::norm(F[k]);
    }
    if (std::sqrt(residual) < 1e-13) return true;
    // Solve (J J^H) y = F, step = -J^H y. m is 1 or 2.
    Complex g00 = hermitian(J[0], J[0]);
    std::vector<Complex> y(m);
    if (m == 1) {
      if (std::abs(g00) < 1e-300) return false;
      y[0] = F[0] / g00;
    } else {
      Complex g01 = hermitian(J[0], J[1]), g10 = hermitian(J[1], J[0]), g11 = hermitian(J[1], J[1]);
      Complex det = g00 * g11 - g01 * g10;
      if (std::abs(det) < 1e-24 * std::max(1.0, std::abs(g00 * g11))) return false;
      y[0] = (g11 * F[0] - g01 * F[1]) / det;
      y[1] = (-g10 * F[0] + g00 * F[1]) / det;
    }
    for (std::size_t i = 0; i < x.size(); ++i)
      for (std::size_t k = 0; k < m; ++k) x[i] -= std::conj(J[k][i]) * y[k];
  }
  return false;
}

}  // namespace

TransversalityReport transversality_probe(const FactoredFiber& fiber, std::size_t samples, std::uint64_t seed) {
  constexpr std::size_t kMaxRetries = 50;
  constexpr double kOriginGuard = 1e-3;
  constexpr double kIndependence = 1e-8;

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const std::size_t n = fiber.vars().size();

  std::vector<std::vector<std::size_t>> groups;
  const auto& factors = fiber.factors();
  if (factors.size() == 1) {
    groups.push_back({0});
  } else {
    for (std::size_t i = 0; i < factors.size(); ++i)
      for (std::size_t j = i + 1; j < factors.size(); ++j) groups.push_back({i, j});
  }

  TransversalityReport report;
  for (const auto& group : groups) {
    // Homogeneous factors in n <= |group| variables meet only at the origin,
    // which is excluded, so there is nothing to sample.
    if (n <= group.size()) {
      ++report.skipped;
      continue;
    }
    std::vector<Polynomial> eqs;
    std::vector<Gradient> grads;
    for (auto k : group) {
      eqs.push_back(factors[k]);
      grads.push_back(gradient_of(factors[k]));
    }
    for (std::size_t s = 0; s < samples; ++s) {
      std::size_t attempts = 0;
      std::vector<Complex> x(n);
      while (true) {
        if (attempts++ == kMaxRetries)
          throw Error(ErrorKind::SamplingFailure, "could not sample the intersection after " + std::to_string(kMaxRetries) + " tries");
        for (auto& xi : x) xi = Complex(gauss(rng), gauss(rng));
        if (project(x, eqs, grads) && std::sqrt(norm2(x)) > kOriginGuard) break;
        ++report.retries;
      }
      bool ok;
      if (group.size() == 1) {
        ok = norm2(grads[0].at(x)) > kIndependence;
      } else {
        auto gi = grads[0].at(x), gj = grads[1].at(x);
        double ni = norm2(gi), nj = norm2(gj);
        double cross = ni * nj - std::norm(hermitian(gi, gj));
        ok = ni > 0 && nj > 0 && cross > kIndependence * ni * nj;
      }
      ok ? ++report.passed : ++report.failed;
    }
  }
  return report;
}

}  // namespace foliage
