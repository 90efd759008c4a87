#include "reglab/poly.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <set>

#include "reglab/error.hpp"

namespace reglab {

UPoly::UPoly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::monomial(std::size_t degree, const mpq_class& c) {
  std::vector<mpq_class> v(degree + 1);
  v[degree] = c;
  return UPoly(std::move(v));
}

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UPoly UPoly::operator+(const UPoly& o) const {
  std::vector<mpq_class> v(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) + o.coeff(i);
  return UPoly(std::move(v));
}

UPoly UPoly::operator-(const UPoly& o) const { return *this + o.scaled(-1); }

UPoly UPoly::operator*(const UPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<mpq_class> v(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
  return UPoly(std::move(v));
}

UPoly UPoly::scaled(const mpq_class& s) const {
  std::vector<mpq_class> v = c_;
  for (auto& x : v) x *= s;
  return UPoly(std::move(v));
}

UPoly UPoly::monic() const { return is_zero() ? *this : scaled(1 / lead()); }

mpq_class UPoly::operator()(const mpq_class& x) const {
  mpq_class acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<mpq_class> v(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * static_cast<unsigned long>(i);
  return UPoly(std::move(v));
}

UPoly UPoly::shifted(const mpq_class& a) const {
  // Horner in the ring Q[e]: acc = acc * (a + e) + c_i.
  UPoly acc;
  const UPoly lin(std::vector<mpq_class>{a, 1});
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * lin + UPoly({*it});
  return acc;
}

DivMod divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw InvalidInput("polynomial division by zero");
  std::vector<mpq_class> r = a.coeffs();
  const long db = b.degree();
  if (a.degree() < db) return {UPoly{}, a};
  std::vector<mpq_class> q(static_cast<std::size_t>(a.degree() - db + 1));
  const mpq_class lb = b.lead();
  for (long i = a.degree(); i >= db; --i) {
    const mpq_class f = r[static_cast<std::size_t>(i)] / lb;
    q[static_cast<std::size_t>(i - db)] = f;
    if (f == 0) continue;
    for (long j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= f * b.coeff(static_cast<std::size_t>(j));
  }
  return {UPoly(std::move(q)), UPoly(std::move(r))};
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly r = divmod(x, y).remainder;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

std::vector<UPoly> square_free_decomposition(const UPoly& p) {
  if (p.is_zero()) throw InvalidInput("square-free decomposition of zero");
  // Yun's algorithm.
  std::vector<UPoly> out;
  const UPoly f = p.monic();
  if (f.degree() == 0) return out;
  const UPoly df = f.derivative();
  UPoly a = gcd(f, df);
  UPoly b = divmod(f, a).quotient;
  UPoly c = divmod(df, a).quotient;
  UPoly d = c - b.derivative();
  while (b.degree() > 0) {
    UPoly g = gcd(b, d);
    out.push_back(g);
    b = divmod(b, g).quotient;
    c = divmod(d, g).quotient;
    d = c - b.derivative();
  }
  return out;
}

std::vector<mpq_class> rational_roots(const UPoly& p) {
  if (p.is_zero()) throw InvalidInput("roots of the zero polynomial");
  std::set<mpq_class> found;
  UPoly rest = p;
  // zero roots
  while (rest.degree() > 0 && rest.coeff(0) == 0) {
    found.insert(0);
    rest = divmod(rest, UPoly({0, 1})).quotient;
  }
  for (const auto& factor : square_free_decomposition(rest)) {
    if (factor.degree() <= 0) continue;
    // integer primitive form: a rational root m/q has q | lead.
    mpz_class den = 1;
    for (const auto& c : factor.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    const mpz_class lead = mpz_class(factor.lead() * den);
    const long n = factor.degree();
    Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(n, n);
    for (long i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
    for (long i = 0; i < n; ++i) comp(i, n - 1) = -factor.coeff(static_cast<std::size_t>(i)).get_d();
    Eigen::EigenSolver<Eigen::MatrixXd> es(comp, false);
    for (long i = 0; i < n; ++i) {
      const double re = es.eigenvalues()[i].real();
      if (!std::isfinite(re)) continue;
      mpz_class m;
      mpz_set_d(m.get_mpz_t(), std::round(re * lead.get_d()));
      for (int delta = -1; delta <= 1; ++delta) {
        mpq_class cand(m + delta, lead);
        cand.canonicalize();
        if (factor(cand) == 0) found.insert(cand);
      }
    }
  }
  return {found.begin(), found.end()};
}

}  // namespace reglab
