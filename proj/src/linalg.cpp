#include "linsite/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace linsite {

Vec Vec::unit(const Field& f, std::size_t dim, std::size_t i) {
  Vec v(f, dim);
  v[i] = Scalar::one(f);
  return v;
}

Vec Vec::operator+(const Vec& o) const {
  if (dim() != o.dim()) throw DomainError("vector dimension mismatch");
  Vec r = *this;
  for (std::size_t i = 0; i < dim(); ++i) r[i] = r[i] + o[i];
  return r;
}

Vec Vec::operator-(const Vec& o) const {
  if (dim() != o.dim()) throw DomainError("vector dimension mismatch");
  Vec r = *this;
  for (std::size_t i = 0; i < dim(); ++i) r[i] = r[i] - o[i];
  return r;
}

Vec Vec::scaled(const Scalar& s) const {
  Vec r = *this;
  for (std::size_t i = 0; i < dim(); ++i) r[i] = r[i] * s;
  return r;
}

void Vec::add_scaled(const Vec& o, const Scalar& s) {
  if (dim() != o.dim()) throw DomainError("vector dimension mismatch");
  for (std::size_t i = 0; i < dim(); ++i) entries_[i] = entries_[i] + o[i] * s;
}

bool Vec::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Scalar& s) { return s.is_zero(); });
}

bool Vec::operator==(const Vec& o) const {
  return field_ == o.field_ && entries_ == o.entries_;
}

Vec Vec::concat(const Vec& o) const {
  std::vector<Scalar> e = entries_;
  e.insert(e.end(), o.entries_.begin(), o.entries_.end());
  return Vec(field_, std::move(e));
}

Vec Vec::slice(std::size_t begin, std::size_t len) const {
  std::vector<Scalar> e(entries_.begin() + begin, entries_.begin() + begin + len);
  return Vec(field_, std::move(e));
}

std::string Vec::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < dim(); ++i) os << (i ? "," : "") << entries_[i].to_string();
  os << "]";
  return os.str();
}

Matrix Matrix::identity(const Field& f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::from_rows(const Field& f, const std::vector<Vec>& rows, std::size_t cols) {
  Matrix m(f, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].dim() != cols) throw DomainError("row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::from_cols(const Field& f, const std::vector<Vec>& cols, std::size_t rows) {
  Matrix m(f, rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].dim() != rows) throw DomainError("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

Vec Matrix::row(std::size_t i) const {
  Vec v(field_, cols_);
  for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

Vec Matrix::col(std::size_t j) const {
  Vec v(field_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw DomainError("matrix product shape mismatch");
  Matrix r(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      if (at(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        r.at(i, j) = r.at(i, j) + at(i, k) * o.at(k, j);
    }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("matrix sum shape mismatch");
  Matrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = r.data_[i] + o.data_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("matrix diff shape mismatch");
  Matrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = r.data_[i] - o.data_[i];
  return r;
}

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix r = *this;
  for (auto& e : r.data_) e = e * s;
  return r;
}

Vec Matrix::apply(const Vec& x) const {
  if (x.dim() != cols_) throw DomainError("matrix apply dimension mismatch");
  Vec y(field_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) y[i] = y[i] + at(i, j) * x[j];
  return y;
}

Matrix Matrix::transposed() const {
  Matrix r(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Matrix Matrix::vstack(const Matrix& below) const {
  if (cols_ != below.cols_) throw DomainError("vstack width mismatch");
  Matrix r(field_, rows_ + below.rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
  for (std::size_t i = 0; i < below.rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(rows_ + i, j) = below.at(i, j);
  return r;
}

Matrix Matrix::hstack(const Matrix& right) const {
  if (rows_ != right.rows_) throw DomainError("hstack height mismatch");
  Matrix r(field_, rows_, cols_ + right.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (std::size_t j = 0; j < right.cols_; ++j) r.at(i, cols_ + j) = right.at(i, j);
  }
  return r;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool Matrix::operator==(const Matrix& o) const {
  return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) os << (i ? ";" : "") << row(i).to_string();
  os << "]";
  return os.str();
}

RrefResult rref(const Matrix& m) {
  RrefResult res;
  res.reduced = m;
  Matrix& a = res.reduced;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t pivot = a.rows();
    for (std::size_t i = r; i < a.rows(); ++i)
      if (!a.at(i, c).is_zero()) {
        pivot = i;
        break;
      }
    if (pivot == a.rows()) continue;
    if (pivot != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(r, j), a.at(pivot, j));
    Scalar inv = a.at(r, c).inverse();
    for (std::size_t j = 0; j < a.cols(); ++j) a.at(r, j) = a.at(r, j) * inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a.at(i, c).is_zero()) continue;
      Scalar factor = a.at(i, c);
      for (std::size_t j = 0; j < a.cols(); ++j)
        a.at(i, j) = a.at(i, j) - factor * a.at(r, j);
    }
    res.pivots.push_back(c);
    ++r;
  }
  res.rank = r;
  return res;
}

SolveResult solve(const Matrix& a, const Vec& b) {
  if (b.dim() != a.rows()) throw DomainError("solve dimension mismatch");
  Matrix aug = a.hstack(Matrix::from_cols(a.field(), {b}, a.rows()));
  RrefResult red = rref(aug);
  SolveResult out;
  out.nullspace = nullspace(a);
  for (std::size_t i = 0; i < red.rank; ++i)
    if (red.pivots[i] == a.cols()) return out;  // pivot in the b column: inconsistent
  out.consistent = true;
  Vec x(a.field(), a.cols());
  for (std::size_t i = 0; i < red.rank; ++i) x[red.pivots[i]] = red.reduced.at(i, a.cols());
  out.particular = x;
  return out;
}

Matrix nullspace(const Matrix& a) {
  RrefResult red = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (std::size_t p : red.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t c = 0; c < a.cols(); ++c) {
    if (is_pivot[c]) continue;
    Vec v(a.field(), a.cols());
    v[c] = Scalar::one(a.field());
    for (std::size_t i = 0; i < red.rank; ++i)
      v[red.pivots[i]] = -red.reduced.at(i, c);
    basis.push_back(v);
  }
  return Matrix::from_rows(a.field(), basis, a.cols());
}

Subspace Subspace::zero(const Field& f, std::size_t ambient_dim) {
  return Subspace(ambient_dim, Matrix(f, 0, ambient_dim), {});
}

Subspace Subspace::full(const Field& f, std::size_t ambient_dim) {
  std::vector<std::size_t> piv(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) piv[i] = i;
  return Subspace(ambient_dim, Matrix::identity(f, ambient_dim), std::move(piv));
}

Subspace Subspace::span_of(const Field& f, std::size_t ambient_dim,
                           const std::vector<Vec>& vectors) {
  return row_space(Matrix::from_rows(f, vectors, ambient_dim));
}

Subspace Subspace::row_space(const Matrix& rows) {
  RrefResult red = rref(rows);
  Matrix basis(rows.field(), red.rank, rows.cols());
  for (std::size_t i = 0; i < red.rank; ++i)
    for (std::size_t j = 0; j < rows.cols(); ++j) basis.at(i, j) = red.reduced.at(i, j);
  return Subspace(rows.cols(), std::move(basis), red.pivots);
}

bool Subspace::contains(const Vec& v) const { return reduce(v).is_zero(); }

bool Subspace::contains(const Subspace& other) const {
  if (ambient_dim_ != other.ambient_dim_) throw DomainError("subspace ambient mismatch");
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

bool Subspace::operator==(const Subspace& o) const {
  return ambient_dim_ == o.ambient_dim_ && basis_ == o.basis_;
}

Vec Subspace::reduce(const Vec& v) const {
  if (v.dim() != ambient_dim_) throw DomainError("reduce dimension mismatch");
  Vec r = v;
  for (std::size_t i = 0; i < dim(); ++i) {
    Scalar c = r[pivots_[i]];
    if (c.is_zero()) continue;
    r.add_scaled(basis_.row(i), -c);
  }
  return r;
}

Vec Subspace::coordinates_of(const Vec& v) const {
  if (!contains(v)) throw DomainError("coordinates_of: vector not in subspace");
  Vec c(field(), dim());
  for (std::size_t i = 0; i < dim(); ++i) c[i] = v[pivots_[i]];
  return c;
}

Matrix Subspace::residual_map() const {
  Matrix p = Matrix::identity(field(), ambient_dim_);
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < ambient_dim_; ++j)
      p.at(j, pivots_[i]) = p.at(j, pivots_[i]) - basis_.at(i, j);
  return p;
}

Subspace Subspace::sum(const Subspace& o) const {
  if (ambient_dim_ != o.ambient_dim_) throw DomainError("subspace ambient mismatch");
  return row_space(basis_.vstack(o.basis_));
}

Subspace Subspace::intersect(const Subspace& o) const {
  if (ambient_dim_ != o.ambient_dim_) throw DomainError("subspace ambient mismatch");
  // (a, b) with a . basis  ==  b . o.basis, read off the common value.
  Matrix lhs = basis_.transposed().hstack(o.basis_.transposed().scaled(-Scalar::one(field())));
  Matrix ker = nullspace(lhs);
  std::vector<Vec> vecs;
  for (std::size_t i = 0; i < ker.rows(); ++i) {
    Vec ab = ker.row(i);
    Vec v(field(), ambient_dim_);
    for (std::size_t r = 0; r < dim(); ++r) v.add_scaled(basis_.row(r), ab[r]);
    vecs.push_back(v);
  }
  return span_of(field(), ambient_dim_, vecs);
}

Subspace Subspace::preimage(const Matrix& m) const {
  if (m.rows() != ambient_dim_) throw DomainError("preimage shape mismatch");
  return row_space(nullspace(residual_map() * m));
}

QuotientSpace::QuotientSpace(Subspace denominator) : denom_(std::move(denominator)) {
  std::vector<bool> is_pivot(denom_.ambient_dim(), false);
  for (std::size_t p : denom_.pivots()) is_pivot[p] = true;
  for (std::size_t c = 0; c < denom_.ambient_dim(); ++c)
    if (!is_pivot[c]) coords_.push_back(c);
}

Vec QuotientSpace::project(const Vec& v) const {
  Vec r = denom_.reduce(v);
  Vec q(denom_.field(), coords_.size());
  for (std::size_t i = 0; i < coords_.size(); ++i) q[i] = r[coords_[i]];
  return q;
}

Vec QuotientSpace::section(const Vec& q) const {
  if (q.dim() != coords_.size()) throw DomainError("section dimension mismatch");
  Vec v(denom_.field(), denom_.ambient_dim());
  for (std::size_t i = 0; i < coords_.size(); ++i) v[coords_[i]] = q[i];
  return v;
}

std::vector<Vec> enumerate_vectors(const Field& f, std::size_t dim, const Bounds& bounds) {
  if (!f.is_prime_field()) throw DomainError("vector enumeration requires a finite field");
  std::uint64_t p = static_cast<std::uint64_t>(f.characteristic());
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < dim; ++i) {
    if (total > bounds.max_vectors / p) throw BoundExceeded("vector enumeration bound exceeded");
    total *= p;
  }
  std::vector<Vec> out;
  out.reserve(total);
  std::vector<std::int64_t> digits(dim, 0);
  for (std::uint64_t n = 0; n < total; ++n) {
    Vec v(f, dim);
    for (std::size_t i = 0; i < dim; ++i) v[i] = Scalar::from_int(f, digits[i]);
    out.push_back(v);
    for (std::size_t i = dim; i-- > 0;) {
      if (++digits[i] < f.characteristic()) break;
      digits[i] = 0;
    }
  }
  return out;
}

std::vector<Subspace> enumerate_subspaces(const Field& f, std::size_t ambient_dim,
                                          const Bounds& bounds) {
  if (!f.is_prime_field()) throw DomainError("subspace enumeration requires a finite field");
  std::uint64_t p = static_cast<std::uint64_t>(f.characteristic());
  std::uint64_t vecs = 1;
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    if (vecs > bounds.max_vectors / p) throw BoundExceeded("subspace enumeration bound exceeded");
    vecs *= p;
  }
  std::vector<Subspace> out;
  out.push_back(Subspace::zero(f, ambient_dim));
  // Every subspace has a unique rref basis: choose pivot columns, then fill
  // the free entries (right of each pivot, outside pivot columns).
  for (std::size_t rank = 1; rank <= ambient_dim; ++rank) {
    std::vector<std::size_t> piv(rank);
    for (std::size_t i = 0; i < rank; ++i) piv[i] = i;
    while (true) {
      std::vector<std::pair<std::size_t, std::size_t>> free_slots;
      std::vector<bool> is_pivot(ambient_dim, false);
      for (std::size_t c : piv) is_pivot[c] = true;
      for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = piv[i] + 1; j < ambient_dim; ++j)
          if (!is_pivot[j]) free_slots.emplace_back(i, j);
      std::uint64_t count = 1;
      for (std::size_t i = 0; i < free_slots.size(); ++i) {
        if (count > bounds.max_sieves / p)
          throw BoundExceeded("subspace enumeration bound exceeded");
        count *= p;
      }
      std::vector<std::int64_t> digits(free_slots.size(), 0);
      for (std::uint64_t n = 0; n < count; ++n) {
        Matrix basis(f, rank, ambient_dim);
        for (std::size_t i = 0; i < rank; ++i) basis.at(i, piv[i]) = Scalar::one(f);
        for (std::size_t s = 0; s < free_slots.size(); ++s)
          basis.at(free_slots[s].first, free_slots[s].second) = Scalar::from_int(f, digits[s]);
        out.push_back(Subspace::row_space(basis));
        if (out.size() > bounds.max_sieves)
          throw BoundExceeded("subspace enumeration bound exceeded");
        for (std::size_t i = free_slots.size(); i-- > 0;) {
          if (++digits[i] < f.characteristic()) break;
          digits[i] = 0;
        }
      }
      // next pivot combination in lexicographic order
      bool advanced = false;
      for (std::size_t i = rank; i-- > 0;) {
        if (piv[i] + (rank - i) < ambient_dim) {
          ++piv[i];
          for (std::size_t j = i + 1; j < rank; ++j) piv[j] = piv[j - 1] + 1;
          advanced = true;
          break;
        }
      }
      if (!advanced) break;
    }
  }
  return out;
}

}  // namespace linsite
