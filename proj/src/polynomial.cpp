#include "foliage/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "foliage/errors.hpp"

namespace foliage {

Monomial Monomial::unit(std::size_t nvars, std::size_t var, unsigned power) {
  Monomial m(nvars);
  m.exps_.at(var) = power;
  return m;
}

unsigned Monomial::degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0u); }

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial q(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) q.exps_[i] = other.exps_[i] - exps_[i];
  return q;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) m.exps_[i] = a.exps_[i] + b.exps_[i];
  return m;
}

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
  unsigned da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  return a.exponents() < b.exponents();
}

void require_same_context(const Variables& a, const Variables& b, const char* what) {
  if (a != b) throw Error(ErrorKind::ContextMismatch, std::string(what) + ": variable contexts differ");
}

Polynomial::Polynomial(Variables vars, TermMap terms) : vars_(std::move(vars)) {
  for (auto& [m, c] : terms) {
    if (m.size() != vars_.size())
      throw Error(ErrorKind::ContextMismatch, "monomial length does not match variable count");
    if (!c.is_zero()) terms_.emplace(m, c);
  }
}

Polynomial Polynomial::constant(const Variables& vars, const GaussianRational& c) {
  return monomial(vars, Monomial(vars.size()), c);
}

Polynomial Polynomial::variable(const Variables& vars, std::size_t index) {
  return monomial(vars, Monomial::unit(vars.size(), index));
}

Polynomial Polynomial::monomial(const Variables& vars, Monomial m, const GaussianRational& c) {
  Polynomial p(vars);
  if (m.size() != vars.size()) throw Error(ErrorKind::ContextMismatch, "monomial length does not match variable count");
  if (!c.is_zero()) p.terms_.emplace(std::move(m), c);
  return p;
}

bool Polynomial::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree() == 0); }

int Polynomial::degree() const {
  if (terms_.empty()) return kDegreeOfZero;
  return static_cast<int>(terms_.rbegin()->first.degree());
}

int Polynomial::low_degree() const {
  if (terms_.empty()) return kDegreeOfZero;
  return static_cast<int>(terms_.begin()->first.degree());
}

bool Polynomial::is_homogeneous(int m) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [m](const auto& t) { return static_cast<int>(t.first.degree()) == m; });
}

bool Polynomial::is_homogeneous() const { return terms_.empty() || degree() == low_degree(); }

GaussianRational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? GaussianRational() : it->second;
}

const Monomial& Polynomial::leading_monomial() const {
  if (terms_.empty()) throw std::logic_error("leading monomial of zero polynomial");
  return terms_.rbegin()->first;
}

const GaussianRational& Polynomial::leading_coefficient() const {
  if (terms_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
  return terms_.rbegin()->second;
}

GaussianRational Polynomial::constant_term() const { return coefficient(Monomial(vars_.size())); }

void Polynomial::add_term(const Monomial& m, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  require_same_context(vars_, o.vars_, "polynomial add");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  require_same_context(vars_, o.vars_, "polynomial sub");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_context(a.vars_, b.vars_, "polynomial mul");
  Polynomial r(a.vars_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial& Polynomial::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result = constant(vars_, 1);
  Polynomial base = *this;
  while (k) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k) base *= base;
  }
  return result;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  Polynomial r(vars_);
  for (const auto& [m, c] : terms_) {
    unsigned e = m[var];
    if (e == 0) continue;
    auto exps = m.exponents();
    exps[var] = e - 1;
    r.terms_.emplace(Monomial(std::move(exps)), c * GaussianRational(static_cast<long>(e)));
  }
  return r;
}

Polynomial Polynomial::compose(std::span<const Polynomial> sigma) const {
  if (sigma.size() != vars_.size())
    throw Error(ErrorKind::ArityMismatch, "substitution needs " + std::to_string(vars_.size()) + " polynomials, got " +
                                              std::to_string(sigma.size()));
  if (sigma.empty()) return *this;
  const Variables& target = sigma.front().vars();
  for (const auto& s : sigma) require_same_context(target, s.vars(), "substitution");

  // powers[i][e] = sigma[i]^e, built lazily up to the largest exponent needed.
  std::vector<std::vector<Polynomial>> powers(sigma.size());
  for (std::size_t i = 0; i < sigma.size(); ++i) powers[i].push_back(constant(target, 1));
  auto power = [&](std::size_t i, unsigned e) -> const Polynomial& {
    while (powers[i].size() <= e) powers[i].push_back(powers[i].back() * sigma[i]);
    return powers[i][e];
  };

  Polynomial r(target);
  for (const auto& [m, c] : terms_) {
    Polynomial term = constant(target, c);
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i]) term *= power(i, m[i]);
    r += term;
  }
  return r;
}

Complex Polynomial::evaluate(std::span<const Complex> point) const {
  if (point.size() != vars_.size())
    throw Error(ErrorKind::ArityMismatch, "evaluation point has wrong dimension");
  // Per-variable power tables, then one product per term.
  int deg = std::max(degree(), 0);
  std::vector<std::vector<Complex>> pw(point.size(), std::vector<Complex>(deg + 1, Complex(1.0)));
  for (std::size_t i = 0; i < point.size(); ++i)
    for (int e = 1; e <= deg; ++e) pw[i][e] = pw[i][e - 1] * point[i];
  Complex sum(0.0);
  for (const auto& [m, c] : terms_) {
    Complex t = c.to_complex();
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i]) t *= pw[i][m[i]];
    sum += t;
  }
  return sum;
}

std::map<int, Polynomial> Polynomial::homogeneous_components() const {
  std::map<int, Polynomial> out;
  for (const auto& [m, c] : terms_) {
    auto [it, _] = out.try_emplace(static_cast<int>(m.degree()), vars_);
    it->second.terms_.emplace(m, c);
  }
  return out;
}

Polynomial Polynomial::homogeneous_part(int d) const {
  Polynomial r(vars_);
  for (const auto& [m, c] : terms_)
    if (static_cast<int>(m.degree()) == d) r.terms_.emplace(m, c);
  return r;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, coeff] = *it;
    // Real negative coefficients print as a subtraction.
    bool negative = coeff.is_real() && sgn(coeff.re()) < 0;
    GaussianRational c = negative ? -coeff : coeff;
    if (!first) os << (negative ? " - " : " + ");
    else if (negative) os << "-";
    first = false;
    bool unit = c.is_one() && m.degree() > 0;
    if (!unit) os << c;
    bool need_star = !unit;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (!m[i]) continue;
      if (need_star) os << "*";
      os << vars_[i];
      if (m[i] > 1) os << "^" << m[i];
      need_star = true;
    }
  }
  return os.str();
}

DivisionResult divide(const Polynomial& g, const Polynomial& f) {
  require_same_context(g.vars(), f.vars(), "division");
  if (f.is_zero()) throw std::invalid_argument("division by zero polynomial");
  const Monomial& lm = f.leading_monomial();
  GaussianRational inv_lc = f.leading_coefficient().inverse();
  Polynomial p = g;
  DivisionResult out{Polynomial(g.vars()), Polynomial(g.vars())};
  while (!p.is_zero()) {
    Monomial pm = p.leading_monomial();
    GaussianRational pc = p.leading_coefficient();
    if (lm.divides(pm)) {
      Polynomial step = Polynomial::monomial(g.vars(), lm.quotient_of(pm), pc * inv_lc);
      out.quotient += step;
      p -= step * f;
    } else {
      out.remainder.add_term(pm, pc);
      p.add_term(pm, -pc);
    }
  }
  return out;
}

std::optional<Polynomial> exact_quotient(const Polynomial& g, const Polynomial& f) {
  auto [q, r] = divide(g, f);
  if (!r.is_zero()) return std::nullopt;
  return q;
}

namespace {

void enumerate(std::size_t nvars, std::size_t var, unsigned remaining, std::vector<unsigned>& cur,
               std::vector<Monomial>& out) {
  if (var + 1 == nvars) {
    cur[var] = remaining;
    out.emplace_back(cur);
    return;
  }
  for (unsigned e = 0; e <= remaining; ++e) {
    cur[var] = e;
    enumerate(nvars, var + 1, remaining - e, cur, out);
  }
}

}  // namespace

std::vector<Monomial> monomials_up_to(std::size_t nvars, int max_degree, int min_degree) {
  std::vector<Monomial> out;
  if (max_degree < 0) return out;
  min_degree = std::max(min_degree, 0);
  if (nvars == 0) {
    if (min_degree == 0) out.emplace_back(std::vector<unsigned>{});
    return out;
  }
  std::vector<unsigned> cur(nvars, 0);
  for (int d = min_degree; d <= max_degree; ++d) enumerate(nvars, 0, static_cast<unsigned>(d), cur, out);
  std::sort(out.begin(), out.end(), GrlexLess{});
  return out;
}

}  // namespace foliage
