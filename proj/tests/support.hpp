#pragma once

// Builders and an independent exact-rank oracle shared by the unit tests.

#include <gmpxx.h>

#include <initializer_list>
#include <vector>

#include "reglab/exactalg.hpp"
#include "reglab/form.hpp"
#include "reglab/scheme.hpp"

namespace testing_support {

using namespace reglab;

inline Vector vec(std::initializer_list<long> xs, Field f = Field::rationals()) {
  Vector v;
  for (long x : xs) v.emplace_back(x, f);
  return v;
}

inline ProjPoint pt(std::initializer_list<long> xs, Field f = Field::rationals()) {
  return ProjPoint(vec(xs, f));
}

inline FiniteScheme points(const std::vector<std::vector<long>>& rows,
                           Field f = Field::rationals()) {
  std::vector<CurvilinearGerm> germs;
  for (const auto& r : rows) {
    Vector v;
    for (long x : r) v.emplace_back(x, f);
    germs.push_back(CurvilinearGerm::reduced(ProjPoint(v)));
  }
  return FiniteScheme(rows.front().size() - 1, std::move(germs));
}

/// Germ given by affine series in chart 0 (each inner list: coefficients of t^0..).
inline CurvilinearGerm affine_germ(const std::vector<std::vector<long>>& jet,
                                   Field f = Field::rationals()) {
  std::vector<Series> s;
  Vector support{Scalar(1, f)};
  for (const auto& c : jet) {
    Series ser;
    for (long x : c) ser.emplace_back(x, f);
    support.push_back(ser.front());
    s.push_back(std::move(ser));
  }
  return CurvilinearGerm::from_jet(ProjPoint(support), 0, s);
}

/// Plain Gauss-Jordan over mpq_class, no fraction-free tricks.
inline std::size_t oracle_rank(std::vector<std::vector<mpq_class>> a) {
  std::size_t r = 0;
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      mpq_class f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

inline std::size_t oracle_rank(const Matrix& m) {
  std::vector<std::vector<mpq_class>> a(m.rows(), std::vector<mpq_class>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j).rational();
  return oracle_rank(std::move(a));
}

/// phi(k) for reduced integer points: rank of monomial values, computed directly.
inline std::size_t oracle_phi_points(const std::vector<std::vector<long>>& pts, unsigned k) {
  const auto monos = monomials(pts.front().size(), k);
  std::vector<std::vector<mpq_class>> a;
  for (const auto& p : pts) {
    std::vector<mpq_class> row;
    for (const auto& e : monos) {
      mpz_class v = 1;
      for (std::size_t i = 0; i < e.size(); ++i) {
        mpz_class pw;
        mpz_pow_ui(pw.get_mpz_t(), mpz_class(p[i]).get_mpz_t(), e[i]);
        v *= pw;
      }
      row.emplace_back(v);
    }
    a.push_back(std::move(row));
  }
  return oracle_rank(std::move(a));
}

}  // namespace testing_support
