#include "reglab/scheme.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace reglab {

// --- series ------------------------------------------------------------------

namespace series {

Series multiply(const Series& a, const Series& b, std::size_t len) {
  const Field f = !a.empty() ? a[0].field() : (!b.empty() ? b[0].field() : Field::rationals());
  Series out = zero_vector(len, f);
  for (std::size_t i = 0; i < a.size() && i < len; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size() && i + j < len; ++j) {
      if (!b[j].is_zero()) out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

Series inverse(const Series& a, std::size_t len) {
  if (a.empty() || a[0].is_zero()) throw InvalidInput("series inverse of a non-unit");
  const Field f = a[0].field();
  Series inv = zero_vector(len, f);
  if (len == 0) return inv;
  inv[0] = Scalar(1, f) / a[0];
  for (std::size_t n = 1; n < len; ++n) {
    Scalar acc(0, f);
    for (std::size_t k = 1; k <= n && k < a.size(); ++k) acc += a[k] * inv[n - k];
    inv[n] = -acc * inv[0];
  }
  return inv;
}

std::size_t order(const Series& a) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero()) return i;
  return a.size();
}

Series truncate(Series a, std::size_t len, Field field) {
  a.resize(len, Scalar(0, field));
  return a;
}

}  // namespace series

// --- ProjPoint ---------------------------------------------------------------

ProjPoint::ProjPoint(Vector coords) : coords_(std::move(coords)) {
  auto first = std::find_if(coords_.begin(), coords_.end(),
                            [](const Scalar& s) { return !s.is_zero(); });
  if (first == coords_.end()) throw InvalidInput("projective point with all coordinates zero");
  const Scalar lead = *first;
  for (auto& c : coords_) c /= lead;
}

// --- CurvilinearGerm -----------------------------------------------------------

CurvilinearGerm CurvilinearGerm::reduced(const ProjPoint& p) {
  std::vector<Series> coords;
  coords.reserve(p.coords().size());
  for (const auto& c : p.coords()) coords.push_back(Series{c});
  return from_homogeneous(coords, 1);
}

CurvilinearGerm CurvilinearGerm::from_jet(const ProjPoint& support, std::size_t chart,
                                          const std::vector<Series>& jet) {
  const std::size_t n = support.ambient();
  if (chart > n) throw InvalidInput("chart index out of range");
  if (support[chart].is_zero()) throw InvalidInput("support coordinate at the chart is zero");
  if (jet.size() != n) {
    throw InvalidInput("jet must list " + std::to_string(n) + " affine coordinates");
  }
  const std::size_t len = jet.empty() ? 1 : jet.front().size();
  if (len == 0) throw InvalidInput("germ length must be at least 1");
  const Field f = support.field();

  CurvilinearGerm g;
  g.support_ = support;
  g.chart_ = chart;
  g.len_ = len;
  g.coords_.resize(n + 1);
  std::size_t k = 0;
  for (std::size_t i = 0; i <= n; ++i) {
    if (i == chart) {
      g.coords_[i] = zero_vector(len, f);
      g.coords_[i][0] = Scalar(1, f);
      continue;
    }
    const Series& s = jet[k++];
    if (s.size() != len) throw InvalidInput("jet coordinates must share one length");
    if (!(s[0] == support[i] / support[chart])) {
      throw InvalidInput("jet constant term does not match the support in chart " +
                         std::to_string(chart));
    }
    for (const auto& c : s)
      if (!(c.field() == f)) throw InvalidInput("jet field mismatch");
    g.coords_[i] = s;
  }
  g.validate();
  return g;
}

CurvilinearGerm CurvilinearGerm::from_homogeneous(const std::vector<Series>& coords,
                                                  std::size_t len) {
  if (coords.empty()) throw InvalidInput("germ needs at least one coordinate");
  if (len == 0) throw InvalidInput("germ length must be at least 1");
  Field f;
  for (const auto& s : coords)
    if (!s.empty()) f = s[0].field();
  std::size_t chart = coords.size();
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (!coords[i].empty() && !coords[i][0].is_zero()) {
      chart = i;
      break;
    }
  }
  if (chart == coords.size()) throw InvalidInput("germ centre has all coordinates zero");
  const Series inv = series::inverse(series::truncate(coords[chart], len, f), len);

  CurvilinearGerm g;
  g.chart_ = chart;
  g.len_ = len;
  g.coords_.reserve(coords.size());
  Vector support;
  for (const auto& s : coords) {
    g.coords_.push_back(series::multiply(series::truncate(s, len, f), inv, len));
    support.push_back(g.coords_.back()[0]);
  }
  g.support_ = ProjPoint(std::move(support));
  g.validate();
  return g;
}

void CurvilinearGerm::validate() const {
  if (len_ >= 2 && is_zero_vector(coefficient(1))) {
    throw NonCurvilinear("germ of length " + std::to_string(len_) +
                         " has vanishing tangent vector");
  }
}

std::vector<Series> CurvilinearGerm::jet() const {
  std::vector<Series> out;
  for (std::size_t i = 0; i < coords_.size(); ++i)
    if (i != chart_) out.push_back(coords_[i]);
  return out;
}

CurvilinearGerm CurvilinearGerm::truncated(std::size_t len) const {
  if (len == 0 || len > len_) throw InvalidInput("truncation length out of range");
  CurvilinearGerm g = *this;
  g.len_ = len;
  for (auto& s : g.coords_) s.resize(len);
  return g;
}

Vector CurvilinearGerm::coefficient(std::size_t j) const {
  Vector v;
  v.reserve(coords_.size());
  for (const auto& s : coords_) v.push_back(s[j]);
  return v;
}

// --- SubschemeSelector / FiniteScheme ----------------------------------------------

std::size_t SubschemeSelector::total() const {
  std::size_t t = 0;
  for (auto l : lengths) t += l;
  return t;
}

FiniteScheme::FiniteScheme(std::size_t ambient, std::vector<CurvilinearGerm> germs)
    : ambient_(ambient), germs_(std::move(germs)) {
  if (germs_.empty()) throw InvalidInput("a finite scheme needs at least one germ");
  const Field f = germs_.front().field();
  for (std::size_t i = 0; i < germs_.size(); ++i) {
    if (germs_[i].ambient() != ambient_) throw InvalidInput("germ lives in the wrong P^N");
    if (!(germs_[i].field() == f)) throw InvalidInput("germs over different fields");
    for (std::size_t j = 0; j < i; ++j) {
      if (germs_[i].support() == germs_[j].support()) {
        throw InvalidInput("germ supports must be pairwise distinct");
      }
    }
  }
}

std::size_t FiniteScheme::degree() const {
  std::size_t d = 0;
  for (const auto& g : germs_) d += g.length();
  return d;
}

bool FiniteScheme::is_reduced() const {
  return std::all_of(germs_.begin(), germs_.end(),
                     [](const CurvilinearGerm& g) { return g.length() == 1; });
}

SubschemeSelector FiniteScheme::whole() const {
  SubschemeSelector s;
  for (const auto& g : germs_) s.lengths.push_back(g.length());
  return s;
}

std::vector<CurvilinearGerm> FiniteScheme::select(const SubschemeSelector& sel) const {
  if (sel.lengths.size() != germs_.size()) {
    throw InvalidInput("selector has " + std::to_string(sel.lengths.size()) +
                       " entries for " + std::to_string(germs_.size()) + " germs");
  }
  std::vector<CurvilinearGerm> out;
  for (std::size_t i = 0; i < germs_.size(); ++i) {
    if (sel.lengths[i] > germs_[i].length()) throw InvalidInput("selector exceeds germ length");
    if (sel.lengths[i] > 0) out.push_back(germs_[i].truncated(sel.lengths[i]));
  }
  return out;
}

FiniteScheme FiniteScheme::subscheme(const SubschemeSelector& sel) const {
  return FiniteScheme(ambient_, select(sel));
}

FiniteScheme FiniteScheme::transformed(const Matrix& g) const {
  if (g.rows() != ambient_ + 1 || g.cols() != ambient_ + 1) {
    throw InvalidInput("coordinate change has the wrong size");
  }
  if (rank(g) != ambient_ + 1) throw InvalidInput("coordinate change is not invertible");
  std::vector<CurvilinearGerm> out;
  for (const auto& germ : germs_) {
    const std::size_t len = germ.length();
    std::vector<Series> coords(ambient_ + 1, zero_vector(len, field()));
    for (std::size_t i = 0; i <= ambient_; ++i)
      for (std::size_t j = 0; j <= ambient_; ++j) {
        if (g(i, j).is_zero()) continue;
        for (std::size_t k = 0; k < len; ++k) coords[i][k] += g(i, j) * germ.coords()[j][k];
      }
    out.push_back(CurvilinearGerm::from_homogeneous(coords, len));
  }
  return FiniteScheme(ambient_, std::move(out));
}

FiniteScheme FiniteScheme::in_field(Field target) const {
  std::vector<CurvilinearGerm> out;
  for (const auto& germ : germs_) {
    std::vector<Series> coords;
    for (const auto& s : germ.coords()) {
      Series t;
      for (const auto& c : s) t.push_back(c.in_field(target));
      coords.push_back(std::move(t));
    }
    out.push_back(CurvilinearGerm::from_homogeneous(coords, germ.length()));
  }
  return FiniteScheme(ambient_, std::move(out));
}

// --- LinearSubspace ------------------------------------------------------------

LinearSubspace::LinearSubspace(std::size_t ambient, std::vector<Vector> forms)
    : ambient_(ambient), forms_(std::move(forms)) {
  if (forms_.empty()) return;
  const Field f = forms_.front().front().field();
  for (const auto& form : forms_) {
    if (form.size() != ambient_ + 1) throw InvalidInput("linear form has the wrong length");
  }
  if (rank(Matrix::from_rows(forms_, ambient_ + 1, f)) != forms_.size()) {
    throw InvalidInput("cutting forms of a linear subspace must be independent");
  }
}

LinearSubspace LinearSubspace::spanned_by(const std::vector<Vector>& points, std::size_t ambient,
                                          Field field) {
  return LinearSubspace(ambient, kernel_basis(Matrix::from_rows(points, ambient + 1, field)));
}

bool LinearSubspace::contains(std::span<const Scalar> point) const {
  return std::all_of(forms_.begin(), forms_.end(),
                     [&](const Vector& f) { return dot(f, point).is_zero(); });
}

// --- span, enumeration, t -------------------------------------------------------

Matrix linear_evaluation_matrix(const FiniteScheme& x, const SubschemeSelector& sel) {
  Matrix m(0, x.ambient() + 1, x.field());
  for (const auto& g : x.select(sel))
    for (std::size_t j = 0; j < g.length(); ++j) m.append_row(g.coefficient(j));
  return m;
}

long span_dim(const FiniteScheme& x, const SubschemeSelector& sel) {
  return static_cast<long>(rank(linear_evaluation_matrix(x, sel))) - 1;
}

long span_dim(const FiniteScheme& x) { return span_dim(x, x.whole()); }

std::vector<SubschemeSelector> enumerate_subschemes(const FiniteScheme& x, std::size_t length,
                                                    std::size_t cap) {
  const std::size_t d = x.degree();
  if (d > cap) {
    throw CapExceeded("scheme degree " + std::to_string(d) + " exceeds enumeration cap " +
                      std::to_string(cap));
  }
  if (length > d) throw InvalidInput("subscheme length exceeds the scheme degree");

  const auto& germs = x.germs();
  std::vector<std::size_t> suffix(germs.size() + 1, 0);
  for (std::size_t i = germs.size(); i-- > 0;) suffix[i] = suffix[i + 1] + germs[i].length();

  std::vector<SubschemeSelector> out;
  SubschemeSelector current;
  current.lengths.assign(germs.size(), 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t left) {
    if (i == germs.size()) {
      if (left == 0) out.push_back(current);
      return;
    }
    if (left > suffix[i]) return;
    for (std::size_t l = 0; l <= std::min(left, germs[i].length()); ++l) {
      current.lengths[i] = l;
      rec(i + 1, left - l);
    }
    current.lengths[i] = 0;
  };
  rec(0, length);
  return out;
}

std::size_t invariant_t(const FiniteScheme& x, std::size_t cap) {
  const std::size_t d = x.degree();
  if (d > cap) {
    throw CapExceeded("scheme degree " + std::to_string(d) + " exceeds enumeration cap " +
                      std::to_string(cap));
  }
  const long n = span_dim(x);
  if (n <= 0) return 1;
  const std::size_t top = std::min(d, static_cast<std::size_t>(n) + 1);
  // Independence is inherited by subschemes, so the first failing length L
  // gives t = L - 2.
  for (std::size_t len = 3; len <= top; ++len) {
    for (const auto& sel : enumerate_subschemes(x, len, cap)) {
      if (span_dim(x, sel) != static_cast<long>(len) - 1) return len - 2;
    }
  }
  return static_cast<std::size_t>(n);
}

// --- secant lines -------------------------------------------------------------------

std::size_t contact_length(const CurvilinearGerm& g, const LinearSubspace& l) {
  std::size_t contact = g.length();
  for (const auto& form : l.forms()) {
    Series s = zero_vector(g.length(), g.field());
    for (std::size_t i = 0; i < form.size(); ++i) {
      if (form[i].is_zero()) continue;
      for (std::size_t k = 0; k < g.length(); ++k) s[k] += form[i] * g.coords()[i][k];
    }
    contact = std::min(contact, series::order(s));
  }
  return contact;
}

std::size_t contact_length(const FiniteScheme& x, const LinearSubspace& l) {
  std::size_t total = 0;
  for (const auto& g : x.germs()) total += contact_length(g, l);
  return total;
}

CollinearWitness max_collinear_length(const FiniteScheme& x) {
  CollinearWitness best;
  best.length = 1;
  if (x.degree() < 2) return best;

  // Every line meeting X in length >= 2 contains a length-2 subscheme, which
  // spans it: a pair of supports or a tangent line.
  const auto& germs = x.germs();
  auto consider = [&](const Vector& p, const Vector& q) {
    LinearSubspace line = LinearSubspace::spanned_by({p, q}, x.ambient(), x.field());
    const std::size_t len = contact_length(x, line);
    if (!best.line || len > best.length) {
      best.length = len;
      best.line = std::move(line);
    }
  };
  for (std::size_t i = 0; i < germs.size(); ++i) {
    if (germs[i].length() >= 2) consider(germs[i].coefficient(0), germs[i].coefficient(1));
    for (std::size_t j = i + 1; j < germs.size(); ++j) {
      consider(germs[i].coefficient(0), germs[j].coefficient(0));
    }
  }
  return best;
}

}  // namespace reglab
