#pragma once

// Exact integer/rational linear algebra over arbitrary-precision numbers.

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "unimod/error.hpp"

namespace unimod {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Floor division for b > 0 (cpp_int division truncates toward zero).
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if (a % b != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

inline bool is_odd(const BigInt& a) { return boost::multiprecision::bit_test(abs(a), 0); }

inline std::int64_t to_int64(const BigInt& a) {
  if (a > std::numeric_limits<std::int64_t>::max() || a < std::numeric_limits<std::int64_t>::min())
    throw Error(ErrorKind::Precondition, "integer " + a.str() + " does not fit in 64 bits");
  return a.convert_to<std::int64_t>();
}

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw Error(ErrorKind::Dimension, "ragged matrix literal");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_symmetric() const {
    if (!square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < i; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorKind::Dimension, "matrix product shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<BigInt>;
using RatMatrix = Matrix<Rational>;

inline RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

// Bilinear form x^T g y for integer coordinate vectors.
inline BigInt bilinear(const IntMatrix& g, const std::vector<std::int64_t>& x,
                       const std::vector<std::int64_t>& y) {
  BigInt s = 0;
  for (std::size_t i = 0; i < g.rows(); ++i) {
    if (x[i] == 0) continue;
    BigInt t = 0;
    for (std::size_t j = 0; j < g.cols(); ++j)
      if (y[j] != 0) t += g(i, j) * y[j];
    s += t * x[i];
  }
  return s;
}

struct ParityVector {
  std::vector<std::uint8_t> bits;

  std::size_t size() const noexcept { return bits.size(); }
  friend bool operator==(const ParityVector&, const ParityVector&) = default;
};

inline ParityVector diagonal_parity(const IntMatrix& g) {
  ParityVector p;
  for (std::size_t i = 0; i < g.rows(); ++i) p.bits.push_back(is_odd(g(i, i)) ? 1 : 0);
  return p;
}

/// Exact determinant by fraction-free (Bareiss) elimination.
inline BigInt det_exact(const IntMatrix& m) {
  if (!m.square()) throw Error(ErrorKind::Dimension, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return BigInt(1);
  IntMatrix a = m;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return BigInt(0);
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

/// Solves a x = b over GF(2). Throws RankDeficient when a is singular mod 2.
inline ParityVector solve_mod2(const IntMatrix& a, const ParityVector& b) {
  if (!a.square() || a.rows() != b.size())
    throw Error(ErrorKind::Dimension, "solve_mod2 needs a square system matching the right-hand side");
  const std::size_t n = a.rows();
  std::vector<std::vector<std::uint8_t>> m(n, std::vector<std::uint8_t>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = is_odd(a(i, j)) ? 1 : 0;
    m[i][n] = b.bits[i] & 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && !m[p][c]) ++p;
    if (p == n) throw Error(ErrorKind::RankDeficient, "matrix is singular modulo 2 (input is not unimodular)");
    std::swap(m[p], m[c]);
    for (std::size_t r = 0; r < n; ++r)
      if (r != c && m[r][c])
        for (std::size_t j = c; j <= n; ++j) m[r][j] ^= m[c][j];
  }
  ParityVector x;
  x.bits.resize(n);
  for (std::size_t i = 0; i < n; ++i) x.bits[i] = m[i][n];
  return x;
}

struct CholeskyData {
  std::vector<Rational> d;  // pivots, all > 0
  RatMatrix mu;             // mu(j, i) for j > i; Q(x) = sum_i d_i (x_i + sum_{j>i} mu(j,i) x_j)^2
};

inline CholeskyData cholesky_rational(const IntMatrix& g) {
  if (!g.square()) throw Error(ErrorKind::Dimension, "cholesky of a non-square matrix");
  if (!g.is_symmetric()) throw Error(ErrorKind::Format, "cholesky of an asymmetric matrix");
  const std::size_t n = g.rows();
  CholeskyData out;
  out.d.resize(n);
  out.mu = RatMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      Rational s = Rational(g(i, j));
      for (std::size_t k = 0; k < j; ++k) s -= out.mu(i, k) * out.mu(j, k) * out.d[k];
      out.mu(i, j) = s / out.d[j];
    }
    Rational s = Rational(g(i, i));
    for (std::size_t k = 0; k < i; ++k) s -= out.mu(i, k) * out.mu(i, k) * out.d[k];
    if (s <= 0) throw Error(ErrorKind::NotPositiveDefinite, "non-positive pivot at index " + std::to_string(i));
    out.d[i] = s;
    out.mu(i, i) = 1;
  }
  return out;
}

inline RatMatrix inverse_rational(const RatMatrix& m) {
  if (!m.square()) throw Error(ErrorKind::Dimension, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix a = m;
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) throw Error(ErrorKind::RankDeficient, "singular matrix");
    a.swap_rows(p, c);
    inv.swap_rows(p, c);
    const Rational piv = a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) /= piv;
      inv(c, j) /= piv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a(r, c) == 0) continue;
      const Rational f = a(r, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(r, j) -= f * a(c, j);
        inv(r, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

inline RatMatrix inverse_rational(const IntMatrix& m) { return inverse_rational(to_rational(m)); }

inline std::size_t rank_rational(RatMatrix a) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(p, r);
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (a(i, c) == 0) continue;
      const Rational f = a(i, c) / a(r, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return r;
}

/// Solves x^T basis = target for x (rows of `basis` are independent). Returns
/// nothing when target is outside the rational row span.
inline std::optional<std::vector<Rational>> solve_in_row_span(const RatMatrix& basis,
                                                              const std::vector<Rational>& target) {
  const std::size_t k = basis.rows();
  const std::size_t n = basis.cols();
  // columns of the augmented system: basis^T x = target
  RatMatrix a(n, k + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) a(i, j) = basis(j, i);
    a(i, k) = target[i];
  }
  std::vector<std::size_t> pivcol;
  std::size_t r = 0;
  for (std::size_t c = 0; c < k && r < n; ++c) {
    std::size_t p = r;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) continue;
    a.swap_rows(p, r);
    const Rational piv = a(r, c);
    for (std::size_t j = 0; j <= k; ++j) a(r, j) /= piv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == r || a(i, c) == 0) continue;
      const Rational f = a(i, c);
      for (std::size_t j = 0; j <= k; ++j) a(i, j) -= f * a(r, j);
    }
    pivcol.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < n; ++i)
    if (a(i, k) != 0) return std::nullopt;
  std::vector<Rational> x(k);
  for (std::size_t i = 0; i < r; ++i) x[pivcol[i]] = a(i, k);
  return x;
}

/// A lattice basis given as integer rows scaled by a common denominator:
/// basis vector i is rows.row(i) / denominator.
struct ScaledBasis {
  IntMatrix rows;
  BigInt denominator = 1;
};

/// Row-style Hermite normal form: upper triangular, positive pivots, entries
/// above each pivot reduced into [0, pivot). Zero rows are dropped.
inline IntMatrix hermite_normal_form(IntMatrix a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  std::size_t r0 = 0;
  for (std::size_t c = 0; c < n && r0 < m; ++c) {
    for (;;) {
      std::size_t best = m;
      std::size_t live = 0;
      for (std::size_t i = r0; i < m; ++i) {
        if (a(i, c) == 0) continue;
        ++live;
        if (best == m || abs(a(i, c)) < abs(a(best, c))) best = i;
      }
      if (live == 0) break;
      a.swap_rows(best, r0);
      if (live == 1) break;
      for (std::size_t i = r0 + 1; i < m; ++i) {
        if (a(i, c) == 0) continue;
        const BigInt q = floor_div(a(i, c), a(r0, c));
        for (std::size_t j = c; j < n; ++j) a(i, j) -= q * a(r0, j);
      }
    }
    if (a(r0, c) == 0) continue;
    if (a(r0, c) < 0)
      for (std::size_t j = c; j < n; ++j) a(r0, j) = -a(r0, j);
    for (std::size_t i = 0; i < r0; ++i) {
      const BigInt q = floor_div(a(i, c), a(r0, c));
      if (q == 0) continue;
      for (std::size_t j = c; j < n; ++j) a(i, j) -= q * a(r0, j);
    }
    ++r0;
  }
  IntMatrix out(r0, n);
  for (std::size_t i = 0; i < r0; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = a(i, j);
  return out;
}

/// Basis of the additive group generated by the rational rows of `gens`.
inline ScaledBasis integral_basis_from_rational_spans(const RatMatrix& gens) {
  BigInt den = 1;
  for (std::size_t i = 0; i < gens.rows(); ++i)
    for (std::size_t j = 0; j < gens.cols(); ++j) {
      const BigInt q = denominator(gens(i, j));
      den = den / gcd(den, q) * q;
    }
  IntMatrix scaled(gens.rows(), gens.cols());
  for (std::size_t i = 0; i < gens.rows(); ++i)
    for (std::size_t j = 0; j < gens.cols(); ++j) {
      const Rational v = gens(i, j) * Rational(den);
      scaled(i, j) = numerator(v);
    }
  IntMatrix h = hermite_normal_form(scaled);
  if (h.rows() != gens.cols())
    throw Error(ErrorKind::RankDeficient, "generators span rank " + std::to_string(h.rows()) + " < " +
                                              std::to_string(gens.cols()));
  // Reduce the common denominator when every entry shares a factor with it.
  BigInt g = den;
  for (std::size_t i = 0; i < h.rows(); ++i)
    for (std::size_t j = 0; j < h.cols(); ++j) g = gcd(g, h(i, j));
  if (g > 1) {
    for (std::size_t i = 0; i < h.rows(); ++i)
      for (std::size_t j = 0; j < h.cols(); ++j) h(i, j) /= g;
    den /= g;
  }
  return ScaledBasis{std::move(h), den};
}

struct LllResult {
  IntMatrix gram;       // reduced Gram, equal to transform^T * input * transform
  IntMatrix transform;  // unimodular; column i holds reduced basis vector i in input coordinates
};

/// Integral LLL on a positive definite Gram matrix (all arithmetic in
/// integers via the d_i / lambda_ij scaled Gram-Schmidt data), delta = 99/100.
inline LllResult lll_reduce_gram(const IntMatrix& input) {
  if (!input.square()) throw Error(ErrorKind::Dimension, "LLL needs a square Gram matrix");
  const std::size_t n = input.rows();
  LllResult res{input, IntMatrix::identity(n)};
  if (n <= 1) return res;
  IntMatrix& g = res.gram;
  IntMatrix& h = res.transform;

  // 1-based indices below: basis index i lives at matrix index i-1.
  std::vector<BigInt> d(n + 1);
  std::vector<std::vector<BigInt>> lam(n + 1, std::vector<BigInt>(n + 1));
  auto gb = [&](std::size_t i, std::size_t j) -> const BigInt& { return g(i - 1, j - 1); };

  auto reduce = [&](std::size_t k, std::size_t l) {
    if (2 * abs(lam[k][l]) <= d[l]) return;
    const BigInt q = floor_div(2 * lam[k][l] + d[l], 2 * d[l]);
    for (std::size_t j = 0; j < n; ++j) g(k - 1, j) -= q * g(l - 1, j);
    for (std::size_t i = 0; i < n; ++i) g(i, k - 1) -= q * g(i, l - 1);
    for (std::size_t i = 0; i < n; ++i) h(i, k - 1) -= q * h(i, l - 1);
    lam[k][l] -= q * d[l];
    for (std::size_t i = 1; i < l; ++i) lam[k][i] -= q * lam[l][i];
  };

  std::size_t kmax = 1;
  d[0] = 1;
  d[1] = gb(1, 1);
  if (d[1] <= 0) throw Error(ErrorKind::NotPositiveDefinite, "LLL input is not positive definite");
  std::size_t k = 2;
  while (k <= n) {
    if (k > kmax) {
      kmax = k;
      for (std::size_t j = 1; j <= k; ++j) {
        BigInt u = gb(k, j);
        for (std::size_t i = 1; i < j; ++i) u = (d[i] * u - lam[k][i] * lam[j][i]) / d[i - 1];
        if (j < k) {
          lam[k][j] = u;
        } else {
          if (u <= 0) throw Error(ErrorKind::NotPositiveDefinite, "LLL input is not positive definite");
          d[k] = u;
        }
      }
    }
    reduce(k, k - 1);
    const BigInt& lk = lam[k][k - 1];
    if (100 * (d[k] * d[k - 2] + lk * lk) < 99 * d[k - 1] * d[k - 1]) {
      // swap basis vectors k-1 and k
      g.swap_rows(k - 1, k - 2);
      g.swap_cols(k - 1, k - 2);
      h.swap_cols(k - 1, k - 2);
      for (std::size_t j = 1; j + 1 < k; ++j) std::swap(lam[k][j], lam[k - 1][j]);
      const BigInt l = lam[k][k - 1];
      const BigInt b = (d[k - 2] * d[k] + l * l) / d[k - 1];
      for (std::size_t i = k + 1; i <= kmax; ++i) {
        const BigInt t = lam[i][k];
        lam[i][k] = (d[k] * lam[i][k - 1] - l * t) / d[k - 1];
        lam[i][k - 1] = (b * t + l * lam[i][k]) / d[k];
      }
      d[k - 1] = b;
      if (k > 2) --k;
    } else {
      for (std::size_t l = k - 1; l-- > 1;) reduce(k, l);
      ++k;
    }
  }
  return res;
}

/// Inverse of a unimodular integer matrix.
inline IntMatrix unimodular_inverse(const IntMatrix& u) {
  const RatMatrix inv = inverse_rational(u);
  IntMatrix out(u.rows(), u.cols());
  for (std::size_t i = 0; i < u.rows(); ++i)
    for (std::size_t j = 0; j < u.cols(); ++j) {
      if (!is_integer(inv(i, j))) throw Error(ErrorKind::Precondition, "matrix is not unimodular");
      out(i, j) = numerator(inv(i, j));
    }
  return out;
}

}  // namespace unimod
