#include "foliage/form.hpp"

#include <algorithm>
#include <sstream>

#include "foliage/errors.hpp"

namespace foliage {

namespace {

// Sorts index in place and returns the permutation sign, or 0 on a repeat.
int sort_with_sign(std::vector<std::size_t>& index) {
  int sign = 1;
  for (std::size_t i = 1; i < index.size(); ++i)
    for (std::size_t j = i; j > 0 && index[j - 1] >= index[j]; --j) {
      if (index[j - 1] == index[j]) return 0;
      std::swap(index[j - 1], index[j]);
      sign = -sign;
    }
  for (std::size_t i = 1; i < index.size(); ++i)
    if (index[i - 1] == index[i]) return 0;
  return sign;
}

// Sign of the shuffle that sorts a ++ b, or 0 when they share an index.
int merge_sign(const FormIndex& a, const FormIndex& b, FormIndex& merged) {
  merged.clear();
  merged.reserve(a.size() + b.size());
  std::size_t inversions = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i] < b[j])) {
      merged.push_back(a[i++]);
    } else if (i == a.size() || b[j] < a[i]) {
      inversions += a.size() - i;
      merged.push_back(b[j++]);
    } else {
      return 0;
    }
  }
  return inversions % 2 ? -1 : 1;
}

}  // namespace

PForm::PForm(Variables vars, int p) : p_(p), vars_(std::move(vars)) {
  if (p < 0) throw Error(ErrorKind::InvalidArgument, "negative form degree");
}

PForm PForm::function(const Polynomial& f) {
  PForm r(f.vars(), 0);
  r.add_component({}, f);
  return r;
}

PForm PForm::differential(const Polynomial& f) {
  PForm r(f.vars(), 1);
  for (std::size_t i = 0; i < f.nvars(); ++i) r.add_component({i}, f.derivative(i));
  return r;
}

PForm PForm::basis(const Variables& vars, std::vector<std::size_t> index, const Polynomial& coeff) {
  require_same_context(vars, coeff.vars(), "basis form");
  for (auto i : index)
    if (i >= vars.size()) throw Error(ErrorKind::InvalidArgument, "form index out of range");
  PForm r(vars, static_cast<int>(index.size()));
  int sign = sort_with_sign(index);
  if (sign == 0) return r;
  r.add_component(index, sign > 0 ? coeff : -coeff);
  return r;
}

PForm PForm::one_form(const Variables& vars, std::span<const Polynomial> coeffs) {
  if (coeffs.size() != vars.size()) throw Error(ErrorKind::ArityMismatch, "1-form needs one coefficient per variable");
  PForm r(vars, 1);
  for (std::size_t i = 0; i < coeffs.size(); ++i) r.add_component({i}, coeffs[i]);
  return r;
}

Polynomial PForm::component(const FormIndex& index) const {
  auto it = components_.find(index);
  return it == components_.end() ? Polynomial(vars_) : it->second;
}

void PForm::add_component(const FormIndex& index, const Polynomial& coeff) {
  require_same_context(vars_, coeff.vars(), "form component");
  if (coeff.is_zero()) return;
  auto [it, inserted] = components_.try_emplace(index, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) components_.erase(it);
  }
}

int PForm::degree() const {
  int d = kDegreeOfZero;
  for (const auto& [_, c] : components_) d = std::max(d, c.degree());
  return d;
}

int PForm::low_degree() const {
  if (components_.empty()) return kDegreeOfZero;
  int d = std::numeric_limits<int>::max();
  for (const auto& [_, c] : components_) d = std::min(d, c.low_degree());
  return d;
}

bool PForm::is_homogeneous() const { return components_.empty() || degree() == low_degree(); }

std::map<int, PForm> PForm::homogeneous_components() const {
  std::map<int, PForm> out;
  for (const auto& [index, c] : components_)
    for (auto& [d, part] : c.homogeneous_components()) {
      auto [it, _] = out.try_emplace(d, vars_, p_);
      it->second.add_component(index, part);
    }
  return out;
}

PForm PForm::operator-() const {
  PForm r(*this);
  for (auto& [_, c] : r.components_) c = -c;
  return r;
}

PForm& PForm::operator+=(const PForm& o) {
  require_same_context(vars_, o.vars_, "form add");
  if (p_ != o.p_) throw Error(ErrorKind::InvalidArgument, "adding forms of different degree");
  for (const auto& [index, c] : o.components_) add_component(index, c);
  return *this;
}

PForm& PForm::operator-=(const PForm& o) { return *this += -o; }

PForm& PForm::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    components_.clear();
    return *this;
  }
  for (auto& [_, coeff] : components_) coeff *= c;
  return *this;
}

PForm& PForm::operator*=(const Polynomial& g) {
  require_same_context(vars_, g.vars(), "form scale");
  ComponentMap scaled;
  for (auto& [index, coeff] : components_) {
    Polynomial prod = coeff * g;
    if (!prod.is_zero()) scaled.emplace(index, std::move(prod));
  }
  components_ = std::move(scaled);
  return *this;
}

std::map<FormIndex, Complex> PForm::evaluate(std::span<const Complex> point) const {
  std::map<FormIndex, Complex> out;
  for (const auto& [index, c] : components_) out.emplace(index, c.evaluate(point));
  return out;
}

std::string PForm::to_string() const {
  if (components_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [index, c] : components_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")";
    if (!index.empty()) os << " " << component_key(vars_, index);
  }
  return os.str();
}

std::string component_key(const Variables& vars, const FormIndex& index) {
  if (index.empty()) return "1";
  std::string key;
  for (std::size_t k = 0; k < index.size(); ++k) {
    if (k) key += "^";
    key += "d" + vars.at(index[k]);
  }
  return key;
}

FormIndex parse_component_key(const Variables& vars, const std::string& key) {
  FormIndex index;
  if (key == "1") return index;
  std::size_t pos = 0;
  while (pos <= key.size()) {
    std::size_t end = key.find('^', pos);
    if (end == std::string::npos) end = key.size();
    std::string part = key.substr(pos, end - pos);
    if (part.size() < 2 || part[0] != 'd') throw Error(ErrorKind::ParseError, "bad component key '" + key + "'");
    auto it = std::find(vars.begin(), vars.end(), part.substr(1));
    if (it == vars.end()) throw Error(ErrorKind::ParseError, "unknown variable in component key '" + key + "'");
    index.push_back(static_cast<std::size_t>(it - vars.begin()));
    pos = end + 1;
  }
  if (!std::is_sorted(index.begin(), index.end()) || std::adjacent_find(index.begin(), index.end()) != index.end())
    throw Error(ErrorKind::ParseError, "component key '" + key + "' is not strictly increasing");
  return index;
}

PForm exterior_derivative(const PForm& omega) {
  PForm r(omega.vars(), omega.p() + 1);
  if (omega.p() >= static_cast<int>(omega.nvars())) return r;
  FormIndex merged;
  for (const auto& [index, c] : omega.components()) {
    for (std::size_t k = 0; k < omega.nvars(); ++k) {
      int sign = merge_sign({k}, index, merged);
      if (sign == 0) continue;
      Polynomial dc = c.derivative(k);
      if (dc.is_zero()) continue;
      r.add_component(merged, sign > 0 ? dc : -dc);
    }
  }
  return r;
}

PForm wedge(const PForm& a, const PForm& b) {
  require_same_context(a.vars(), b.vars(), "wedge");
  PForm r(a.vars(), a.p() + b.p());
  if (a.p() + b.p() > static_cast<int>(a.nvars())) return r;
  FormIndex merged;
  for (const auto& [ia, ca] : a.components())
    for (const auto& [ib, cb] : b.components()) {
      int sign = merge_sign(ia, ib, merged);
      if (sign == 0) continue;
      Polynomial prod = ca * cb;
      r.add_component(merged, sign > 0 ? prod : -prod);
    }
  return r;
}

PForm pullback(std::span<const Polynomial> sigma, const PForm& alpha) {
  if (sigma.size() != alpha.nvars())
    throw Error(ErrorKind::ArityMismatch, "pullback map has " + std::to_string(sigma.size()) + " components, form lives in " +
                                              std::to_string(alpha.nvars()) + " variables");
  if (sigma.empty()) throw Error(ErrorKind::ArityMismatch, "empty pullback map");
  const Variables& target = sigma.front().vars();
  std::vector<PForm> dsigma;
  dsigma.reserve(sigma.size());
  for (const auto& s : sigma) {
    require_same_context(target, s.vars(), "pullback");
    dsigma.push_back(PForm::differential(s));
  }
  PForm r(target, alpha.p());
  for (const auto& [index, c] : alpha.components()) {
    PForm term = PForm::function(c.compose(sigma));
    for (auto i : index) term = wedge(term, dsigma[i]);
    r += term;
  }
  return r;
}

Polynomial radial_contraction(const PForm& omega) {
  if (omega.p() != 1) throw Error(ErrorKind::InvalidArgument, "radial contraction needs a 1-form");
  Polynomial g(omega.vars());
  for (const auto& [index, c] : omega.components()) g += Polynomial::variable(omega.vars(), index[0]) * c;
  return g;
}

LogForm::LogForm(std::vector<Term> terms) : terms_(std::move(terms)) {
  if (terms_.empty()) throw Error(ErrorKind::InvalidArgument, "logarithmic form needs at least one term");
  for (const auto& t : terms_) {
    require_same_context(terms_.front().factor.vars(), t.factor.vars(), "logarithmic form");
    if (t.factor.is_constant()) throw Error(ErrorKind::InvalidArgument, "logarithmic factor must be non-constant");
  }
}

const Variables& LogForm::vars() const { return terms_.front().factor.vars(); }

Polynomial LogForm::denominator() const {
  Polynomial f = Polynomial::constant(vars(), 1);
  for (const auto& t : terms_) f *= t.factor;
  return f;
}

PForm LogForm::cleared() const {
  PForm r(vars(), 1);
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    Polynomial others = Polynomial::constant(vars(), terms_[k].lambda);
    for (std::size_t j = 0; j < terms_.size(); ++j)
      if (j != k) others *= terms_[j].factor;
    r += others * PForm::differential(terms_[k].factor);
  }
  return r;
}

}  // namespace foliage
