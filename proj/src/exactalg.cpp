#include "reglab/exactalg.hpp"

#include <algorithm>
#include <utility>

namespace reglab {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 p) { return static_cast<u64>((static_cast<u128>(a) * b) % p); }

u64 pow_mod(u64 base, u64 exp, u64 p) {
  u64 result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1U) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    exp >>= 1U;
  }
  return result;
}

u64 inv_mod(u64 a, u64 p) {
  if (a % p == 0) throw InvalidInput("division by zero in " + Field::prime(p).name());
  return pow_mod(a, p - 2, p);
}

u64 reduce_mpz(const mpz_class& z, u64 p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
  return r.get_ui();
}

u64 reduce_mpq(const mpq_class& q, u64 p) {
  const u64 num = reduce_mpz(q.get_num(), p);
  const u64 den = reduce_mpz(q.get_den(), p);
  if (den == 0) throw InvalidInput("denominator vanishes modulo " + std::to_string(p));
  return mul_mod(num, inv_mod(den, p), p);
}

// ---------------------------------------------------------------------------
// Echelon forms. Both routines leave the matrix in row echelon form and report
// the pivot column of every nonzero row.

struct IntegerEchelon {
  std::vector<std::vector<mpz_class>> rows;
  std::vector<std::size_t> pivots;
};

// Scales each row by the lcm of its denominators (row scaling preserves row
// space and kernel) and runs Bareiss fraction-free elimination. Pivot: first
// nonzero entry in column order.
IntegerEchelon bareiss_echelon(const Matrix& m, std::size_t stop_at_rank) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  IntegerEchelon out;
  out.rows.assign(rows, std::vector<mpz_class>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    mpz_class lcm = 1;
    for (std::size_t c = 0; c < cols; ++c) {
      const mpz_class& den = m(r, c).rational().get_den();
      if (den != 1) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
    }
    for (std::size_t c = 0; c < cols; ++c) {
      const mpq_class& q = m(r, c).rational();
      if (lcm == 1) {
        out.rows[r][c] = q.get_num();
      } else {
        mpz_class scaled = lcm / q.get_den();
        out.rows[r][c] = scaled * q.get_num();
      }
    }
  }

  auto& a = out.rows;
  mpz_class prev = 1;
  mpz_class tmp;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows && rank < stop_at_rank; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    const mpz_class& pv = a[rank][c];
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const mpz_class lead = a[i][c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_mul(tmp.get_mpz_t(), pv.get_mpz_t(), a[i][j].get_mpz_t());
        mpz_submul(tmp.get_mpz_t(), lead.get_mpz_t(), a[rank][j].get_mpz_t());
        mpz_divexact(a[i][j].get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = pv;
    out.pivots.push_back(c);
    ++rank;
  }
  return out;
}

struct ModularEchelon {
  std::vector<std::vector<u64>> rows;
  std::vector<std::size_t> pivots;  // pivot entries normalised to 1
};

ModularEchelon modular_echelon(const Matrix& m, std::size_t stop_at_rank) {
  const u64 p = m.field().characteristic();
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  ModularEchelon out;
  out.rows.assign(rows, std::vector<u64>(cols));
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) out.rows[r][c] = m(r, c).residue();

  auto& a = out.rows;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows && rank < stop_at_rank; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    const u64 inv = inv_mod(a[rank][c], p);
    for (std::size_t j = c; j < cols; ++j) a[rank][j] = mul_mod(a[rank][j], inv, p);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const u64 lead = a[i][c];
      if (lead == 0) continue;
      for (std::size_t j = c; j < cols; ++j) {
        const u64 sub = mul_mod(lead, a[rank][j], p);
        a[i][j] = a[i][j] >= sub ? a[i][j] - sub : a[i][j] + p - sub;
      }
    }
    out.pivots.push_back(c);
    ++rank;
  }
  return out;
}

// Echelon form converted back to Scalars, so kernel and solve share one
// back-substitution routine.
struct ScalarEchelon {
  std::vector<Vector> rows;  // only the nonzero rows
  std::vector<std::size_t> pivots;
};

ScalarEchelon echelon(const Matrix& m) {
  ScalarEchelon out;
  const Field f = m.field();
  if (f.is_rational()) {
    auto e = bareiss_echelon(m, m.rows());
    out.pivots = e.pivots;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
      Vector row;
      row.reserve(m.cols());
      for (auto& z : e.rows[r]) row.emplace_back(mpq_class(z), f);
      out.rows.push_back(std::move(row));
    }
  } else {
    auto e = modular_echelon(m, m.rows());
    out.pivots = e.pivots;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
      Vector row;
      row.reserve(m.cols());
      for (u64 z : e.rows[r]) row.push_back(Scalar::from_residue(z, f));
      out.rows.push_back(std::move(row));
    }
  }
  return out;
}

// Solves the echelon system for the pivot variables given values of the free
// ones (already stored in x), restricted to the first `ncols` columns; `rhs`
// holds the per-row right-hand side.
void back_substitute(const ScalarEchelon& e, std::size_t ncols, const Vector& rhs, Vector& x) {
  for (std::size_t r = e.pivots.size(); r-- > 0;) {
    const std::size_t pc = e.pivots[r];
    Scalar acc = rhs[r];
    for (std::size_t j = pc + 1; j < ncols; ++j) {
      if (!e.rows[r][j].is_zero() && !x[j].is_zero()) acc -= e.rows[r][j] * x[j];
    }
    x[pc] = acc / e.rows[r][pc];
  }
}

}  // namespace

// --- Field -----------------------------------------------------------------

Field Field::prime(std::uint64_t p) {
  if (p < 3 || p % 2 == 0 || p >= (std::uint64_t{1} << 62)) {
    throw InvalidInput("field characteristic must be an odd prime below 2^62: " +
                       std::to_string(p));
  }
  mpz_class z(std::to_string(p));
  if (mpz_probab_prime_p(z.get_mpz_t(), 30) == 0) {
    throw InvalidInput("not a prime: " + std::to_string(p));
  }
  Field f;
  f.prime_ = p;
  return f;
}

std::string Field::name() const {
  return is_rational() ? std::string("Q") : "F_" + std::to_string(prime_);
}

// --- Scalar ----------------------------------------------------------------

Scalar::Scalar(long value, Field field) : Scalar(mpq_class(value), field) {}

Scalar::Scalar(const mpq_class& value, Field field) : field_(field) {
  if (field.is_rational()) {
    value_ = value;
    value_.canonicalize();
  } else {
    residue_ = reduce_mpq(value, field.characteristic());
  }
}

Scalar Scalar::from_residue(std::uint64_t r, Field field) {
  if (field.is_rational()) throw InvalidInput("from_residue requires a prime field");
  Scalar s(0, field);
  s.residue_ = r % field.characteristic();
  return s;
}

Scalar Scalar::parse(std::string_view text, Field field) {
  std::string s(text);
  const auto slash = s.find('/');
  mpz_class num;
  mpz_class den = 1;
  auto parse_int = [&](const std::string& part, mpz_class& out) {
    std::string trimmed = part;
    if (!trimmed.empty() && trimmed[0] == '+') trimmed.erase(0, 1);
    if (trimmed.empty() || out.set_str(trimmed, 10) != 0) {
      throw InvalidInput("malformed exact number: '" + s + "'");
    }
  };
  if (slash == std::string::npos) {
    parse_int(s, num);
  } else {
    parse_int(s.substr(0, slash), num);
    parse_int(s.substr(slash + 1), den);
    if (den == 0) throw InvalidInput("zero denominator: '" + s + "'");
  }
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(q, field);
}

bool Scalar::is_zero() const { return field_.is_rational() ? value_ == 0 : residue_ == 0; }
bool Scalar::is_one() const { return field_.is_rational() ? value_ == 1 : residue_ == 1; }

const mpq_class& Scalar::rational() const {
  if (!field_.is_rational()) throw InvalidInput("rational() on a prime-field scalar");
  return value_;
}

Scalar Scalar::in_field(Field target) const {
  if (target == field_) return *this;
  if (!field_.is_rational()) throw InvalidInput("cannot move a prime-field scalar to another field");
  return Scalar(value_, target);
}

std::string Scalar::to_string() const {
  return field_.is_rational() ? value_.get_str() : std::to_string(residue_);
}

void Scalar::require_same_field(const Scalar& other) const {
  if (!(field_ == other.field_)) {
    throw InvalidInput("field mismatch: " + field_.name() + " vs " + other.field_.name());
  }
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (field_.is_rational()) {
    r.value_ = -value_;
  } else if (residue_ != 0) {
    r.residue_ = field_.characteristic() - residue_;
  }
  return r;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  require_same_field(rhs);
  if (field_.is_rational()) {
    value_ += rhs.value_;
  } else {
    const u64 p = field_.characteristic();
    residue_ = static_cast<u64>((static_cast<u128>(residue_) + rhs.residue_) % p);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) { return *this += -rhs; }

Scalar& Scalar::operator*=(const Scalar& rhs) {
  require_same_field(rhs);
  if (field_.is_rational()) {
    value_ *= rhs.value_;
  } else {
    residue_ = mul_mod(residue_, rhs.residue_, field_.characteristic());
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  require_same_field(rhs);
  if (rhs.is_zero()) throw InvalidInput("division by zero");
  if (field_.is_rational()) {
    value_ /= rhs.value_;
  } else {
    const u64 p = field_.characteristic();
    residue_ = mul_mod(residue_, inv_mod(rhs.residue_, p), p);
  }
  return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (!(a.field_ == b.field_)) return false;
  return a.field_.is_rational() ? a.value_ == b.value_ : a.residue_ == b.residue_;
}

Vector zero_vector(std::size_t n, Field field) { return Vector(n, Scalar(0, field)); }

Scalar dot(std::span<const Scalar> a, std::span<const Scalar> b) {
  if (a.size() != b.size()) throw InvalidInput("dot: length mismatch");
  if (a.empty()) return Scalar();
  Scalar acc(0, a[0].field());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_zero() && !b[i].is_zero()) acc += a[i] * b[i];
  }
  return acc;
}

bool is_zero_vector(std::span<const Scalar> v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

// --- Matrix ----------------------------------------------------------------

Matrix::Matrix(std::size_t rows, std::size_t cols, Field field)
    : rows_(rows), cols_(cols), field_(field), data_(rows * cols, Scalar(0, field)) {}

Matrix Matrix::identity(std::size_t n, Field field) {
  Matrix m(n, n, field);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1, field);
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols, Field field) {
  Matrix m(0, cols, field);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

Matrix Matrix::from_ints(std::initializer_list<std::initializer_list<long>> rows, Field field) {
  const std::size_t cols = rows.size() == 0 ? 0 : rows.begin()->size();
  Matrix m(0, cols, field);
  for (const auto& r : rows) {
    if (r.size() != cols) throw InvalidInput("from_ints: ragged rows");
    Vector v;
    for (long x : r) v.emplace_back(x, field);
    m.append_row(v);
  }
  return m;
}

void Matrix::append_row(std::span<const Scalar> values) {
  if (values.size() != cols_) throw InvalidInput("append_row: width mismatch");
  for (const auto& v : values) {
    if (!(v.field() == field_)) throw InvalidInput("append_row: field mismatch");
  }
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_, field_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Vector Matrix::apply(std::span<const Scalar> x) const {
  if (x.size() != cols_) throw InvalidInput("apply: length mismatch");
  Vector out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(dot(row(r), x));
  return out;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw InvalidInput("matrix product: shape mismatch");
  Matrix out(rows_, rhs.cols_, field_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

// --- Linear algebra ----------------------------------------------------------

std::size_t rank(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  const std::size_t limit = std::min(m.rows(), m.cols());
  if (m.field().is_rational()) return bareiss_echelon(m, limit).pivots.size();
  return modular_echelon(m, limit).pivots.size();
}

std::vector<Vector> kernel_basis(const Matrix& m) {
  const Field f = m.field();
  const std::size_t cols = m.cols();
  const ScalarEchelon e = echelon(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : e.pivots) is_pivot[c] = true;

  std::vector<Vector> basis;
  const Vector zero_rhs = zero_vector(e.pivots.size(), f);
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vector x = zero_vector(cols, f);
    x[free] = Scalar(1, f);
    back_substitute(e, cols, zero_rhs, x);
    basis.push_back(std::move(x));
  }
  return basis;
}

std::optional<AffineSolution> solve_affine(const Matrix& m, std::span<const Scalar> rhs) {
  if (rhs.size() != m.rows()) throw InvalidInput("solve_affine: rhs length must equal rows");
  const Field f = m.field();
  const std::size_t cols = m.cols();

  Matrix augmented(0, cols + 1, f);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Vector row(m.row(r).begin(), m.row(r).end());
    row.push_back(rhs[r]);
    augmented.append_row(row);
  }
  ScalarEchelon e = echelon(augmented);
  if (!e.pivots.empty() && e.pivots.back() == cols) return std::nullopt;

  Vector row_rhs;
  row_rhs.reserve(e.rows.size());
  for (const auto& row : e.rows) row_rhs.push_back(row[cols]);

  AffineSolution sol;
  sol.particular = zero_vector(cols, f);
  back_substitute(e, cols, row_rhs, sol.particular);

  std::vector<bool> is_pivot(cols, false);
  for (auto c : e.pivots) is_pivot[c] = true;
  const Vector zero_rhs = zero_vector(e.rows.size(), f);
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vector x = zero_vector(cols, f);
    x[free] = Scalar(1, f);
    back_substitute(e, cols, zero_rhs, x);
    sol.kernel.push_back(std::move(x));
  }
  return sol;
}

}  // namespace reglab
