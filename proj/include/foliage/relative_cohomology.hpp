#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "foliage/form.hpp"
#include "foliage/linear_solve.hpp"

namespace foliage {

/// f = f_1 ... f_{r+1} together with the coefficient matrix of the
/// generators theta_j = sum_k lambda_k^{(j)} df_k / f_k, j = 1..r.
///
/// Construction validates what can be checked exactly: each factor is
/// homogeneous and non-constant, the generator matrix satisfies the
/// independence condition det[1...1; lambda^{(1)}; ...; lambda^{(r)}] != 0, and
/// f is reduced (square-free). Irreducibility and pairwise coprimality are
/// taken on trust.
class FactoredFiber {
 public:
  explicit FactoredFiber(std::vector<Polynomial> factors);
  FactoredFiber(std::vector<Polynomial> factors, Matrix generator_matrix);

  const std::vector<Polynomial>& factors() const { return factors_; }
  const Variables& vars() const { return factors_.front().vars(); }
  /// Number of generators r (one fewer than the number of factors).
  std::size_t rank() const { return factors_.size() - 1; }
  const Polynomial& product() const { return product_; }
  /// nu with deg f = nu + 1.
  int nu() const { return product_.degree() - 1; }
  const Matrix& generator_matrix() const { return generators_; }
  bool default_generators() const { return default_generators_; }

  LogForm generator(std::size_t j) const;
  /// f * theta_j, a polynomial 1-form.
  PForm cleared_generator(std::size_t j) const;

 private:
  std::vector<Polynomial> factors_;
  Matrix generators_;
  Polynomial product_;
  bool default_generators_ = true;
};

/// Exact square-freeness test: restricts f to a few pseudo-random rational
/// lines and checks the restriction for repeated roots. A non-reduced f is
/// never reported as reduced; a reduced f can only be misreported if every
/// sampled line is special.
bool is_reduced(const Polynomial& f);

struct RelativeClosedness {
  bool closed = false;
  /// d omega ^ df.
  PForm defect;
};

RelativeClosedness relatively_closed(const PForm& omega, const Polynomial& f);

/// omega = a df + dh + sum_j lambda_j f theta_j.
struct Decomposition {
  GaussianRational a;
  Polynomial h;
  std::vector<GaussianRational> lambda;
  std::size_t kernel_dim = 0;
};

/// Solves for the decomposition by exact elimination over the monomial
/// coefficients of degree <= nu. The representative returned has h(0) = 0 and
/// zero coefficient at the leading monomial of f, which fixes the kernel
/// direction (a, h) -> (a - c, h + c f).
///
/// Throws DegreeBound if deg omega > nu, NotRelativelyClosed (with the
/// defect) if d omega ^ df != 0, NoSolution (with the first inconsistent
/// monomial identity) if the linear system has no solution.
Decomposition decompose(const PForm& omega, const FactoredFiber& fiber);

/// a df + dh + sum lambda_j f theta_j.
PForm reassemble(const Decomposition& d, const FactoredFiber& fiber);

/// For h, f homogeneous of equal degree: lambda with h = lambda f when f
/// divides every component of dh ^ df, nullopt otherwise.
std::optional<GaussianRational> divisibility_lemma_check(const Polynomial& h, const Polynomial& f);

struct TransversalityReport {
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t retries = 0;
  /// Factor groups whose common zero set is just the origin.
  std::size_t skipped = 0;
  /// Always true: sampled evidence, not a proof.
  bool heuristic = true;
};

/// Samples points on f_i = f_j = 0 (Newton projection from random starts) for
/// every factor pair and checks that df_i, df_j are independent there. With a
/// single factor it checks df_1 != 0 on f_1 = 0 instead. Groups meeting only
/// at the origin are counted as skipped.
TransversalityReport transversality_probe(const FactoredFiber& fiber, std::size_t samples, std::uint64_t seed);

}  // namespace foliage
