#include "reglab/form.hpp"

#include <numeric>
#include <string>

namespace reglab {

std::vector<Exponents> monomials(std::size_t nvars, unsigned degree) {
  std::vector<Exponents> out;
  if (nvars == 0) return out;
  Exponents e(nvars, 0);
  // Lex-descending enumeration of compositions of `degree` into nvars parts.
  auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
    if (i + 1 == nvars) {
      e[i] = left;
      out.push_back(e);
      return;
    }
    for (unsigned v = left + 1; v-- > 0;) {
      e[i] = v;
      self(self, i + 1, left - v);
    }
    e[i] = 0;
  };
  rec(rec, 0, degree);
  return out;
}

Form::Form(std::size_t nvars, unsigned degree, Field field)
    : nvars_(nvars), degree_(degree), field_(field) {}

Form Form::monomial(const Exponents& e, Field field) {
  Form f(e.size(), std::accumulate(e.begin(), e.end(), 0U), field);
  f.add_term(e, Scalar(1, field));
  return f;
}

Form Form::linear(const Vector& coeffs) {
  if (coeffs.empty()) throw InvalidInput("linear form needs coefficients");
  Form f(coeffs.size(), 1, coeffs.front().field());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    Exponents e(coeffs.size(), 0);
    e[i] = 1;
    f.add_term(e, coeffs[i]);
  }
  return f;
}

Form Form::constant(std::size_t nvars, const Scalar& c) {
  Form f(nvars, 0, c.field());
  f.add_term(Exponents(nvars, 0), c);
  return f;
}

void Form::add_term(const Exponents& e, const Scalar& c) {
  if (e.size() != nvars_) throw InvalidInput("exponent vector has the wrong length");
  if (std::accumulate(e.begin(), e.end(), 0U) != degree_) {
    throw InvalidInput("term of degree " + std::to_string(std::accumulate(e.begin(), e.end(), 0U)) +
                       " in a form of degree " + std::to_string(degree_));
  }
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Form Form::operator*(const Form& rhs) const {
  if (nvars_ != rhs.nvars_) throw InvalidInput("form product: variable count mismatch");
  Form out(nvars_, degree_ + rhs.degree_, field_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : rhs.terms_) {
      Exponents e(nvars_);
      for (std::size_t i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

Form Form::operator+(const Form& rhs) const {
  if (nvars_ != rhs.nvars_ || degree_ != rhs.degree_) throw InvalidInput("form sum: shape mismatch");
  Form out = *this;
  for (const auto& [e, c] : rhs.terms_) out.add_term(e, c);
  return out;
}

Form Form::scaled(const Scalar& c) const {
  Form out(nvars_, degree_, field_);
  for (const auto& [e, v] : terms_) out.add_term(e, v * c);
  return out;
}

Form Form::pow(unsigned k) const {
  Form out = constant(nvars_, Scalar(1, field_));
  for (unsigned i = 0; i < k; ++i) out = out * *this;
  return out;
}

Form Form::compose(const std::vector<Vector>& linear_forms) const {
  if (linear_forms.size() != nvars_) throw InvalidInput("compose: one linear form per variable");
  const std::size_t target = linear_forms.empty() ? 0 : linear_forms.front().size();
  std::vector<Form> lin;
  for (const auto& l : linear_forms) {
    if (l.size() != target) throw InvalidInput("compose: ragged linear forms");
    lin.push_back(Form::linear(l));
  }
  Form out(target, degree_, field_);
  for (const auto& [e, c] : terms_) {
    Form term = constant(target, c);
    for (std::size_t i = 0; i < nvars_; ++i)
      if (e[i] > 0) term = term * lin[i].pow(e[i]);
    out = out + term;
  }
  return out;
}

Scalar Form::evaluate(std::span<const Scalar> point) const {
  if (point.size() != nvars_) throw InvalidInput("evaluate: point has the wrong length");
  Scalar acc(0, field_);
  for (const auto& [e, c] : terms_) {
    Scalar v = c;
    for (std::size_t i = 0; i < nvars_; ++i)
      for (unsigned k = 0; k < e[i]; ++k) v *= point[i];
    acc += v;
  }
  return acc;
}

}  // namespace reglab
