#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "eqsig/errors.hpp"

namespace eqsig {

// Dense symmetric matrix over arbitrary-precision integers.
class SymIntMatrix {
 public:
  SymIntMatrix() = default;
  explicit SymIntMatrix(std::size_t dim) : dim_(dim), a_(dim * dim) {}

  static SymIntMatrix identity(std::size_t dim) {
    SymIntMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m.a_[i * dim + i] = 1;
    return m;
  }

  static SymIntMatrix from_rows(const std::vector<std::vector<long>>& rows) {
    SymIntMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != rows.size())
        throw std::invalid_argument("from_rows: not square");
      for (std::size_t j = 0; j < rows.size(); ++j) m.a_[i * rows.size() + j] = rows[i][j];
    }
    if (!m.is_symmetric()) throw std::invalid_argument("from_rows: not symmetric");
    return m;
  }

  std::size_t dim() const { return dim_; }

  const mpz_class& at(std::size_t i, std::size_t j) const { return a_[i * dim_ + j]; }

  // Writes both (i,j) and (j,i).
  void set(std::size_t i, std::size_t j, const mpz_class& v) {
    a_[i * dim_ + j] = v;
    a_[j * dim_ + i] = v;
  }

  void add(std::size_t i, std::size_t j, const mpz_class& v) {
    a_[i * dim_ + j] += v;
    if (i != j) a_[j * dim_ + i] += v;
  }

  bool is_symmetric() const {
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = i + 1; j < dim_; ++j)
        if (a_[i * dim_ + j] != a_[j * dim_ + i]) return false;
    return true;
  }

  bool operator==(const SymIntMatrix& o) const { return dim_ == o.dim_ && a_ == o.a_; }

  // B^T * A * B, where B's columns are given as integer vectors.
  SymIntMatrix congruent_by_columns(const std::vector<std::vector<mpz_class>>& cols) const {
    SymIntMatrix out(cols.size());
    std::vector<std::vector<mpz_class>> ac(cols.size(), std::vector<mpz_class>(dim_));
    for (std::size_t k = 0; k < cols.size(); ++k) {
      if (cols[k].size() != dim_) throw std::invalid_argument("congruent_by_columns: bad vector size");
      for (std::size_t i = 0; i < dim_; ++i) {
        mpz_class s = 0;
        for (std::size_t j = 0; j < dim_; ++j) s += at(i, j) * cols[k][j];
        ac[k][i] = s;
      }
    }
    for (std::size_t k = 0; k < cols.size(); ++k)
      for (std::size_t l = k; l < cols.size(); ++l) {
        mpz_class s = 0;
        for (std::size_t i = 0; i < dim_; ++i) s += cols[k][i] * ac[l][i];
        out.set(k, l, s);
      }
    return out;
  }

  mpz_class determinant() const {
    // Fraction-free via rational elimination; dimensions here are tiny.
    std::size_t n = dim_;
    std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a[i][j] = at(i, j);
    mpq_class det = 1;
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t p = c;
      while (p < n && a[p][c] == 0) ++p;
      if (p == n) return 0;
      if (p != c) {
        std::swap(a[p], a[c]);
        det = -det;
      }
      det *= a[c][c];
      for (std::size_t r = c + 1; r < n; ++r) {
        if (a[r][c] == 0) continue;
        mpq_class f = a[r][c] / a[c][c];
        for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
      }
    }
    det.canonicalize();
    if (det.get_den() != 1) fail_internal("determinant", "non-integral determinant of integer matrix");
    return det.get_num();
  }

 private:
  std::size_t dim_ = 0;
  std::vector<mpz_class> a_;
};

struct SignatureTriple {
  std::size_t p = 0;  // positive inertia index
  std::size_t q = 0;  // negative inertia index
  std::size_t z = 0;  // nullity

  long signature() const { return static_cast<long>(p) - static_cast<long>(q); }
  std::size_t rank() const { return p + q; }
  bool operator==(const SignatureTriple& o) const { return p == o.p && q == o.q && z == o.z; }
};

// Inertia by symmetric congruence reduction over exact rationals.
// Pivot rule: first nonzero diagonal entry in index order. When the active
// diagonal is all zero but an off-diagonal entry survives, the basis change
// e_i <- e_i + e_j, e_j <- e_i - e_j turns the hyperbolic pair into a +/-
// diagonal pair, contributing (1,1) to (p,q).
inline SignatureTriple signature(const SymIntMatrix& m) {
  if (!m.is_symmetric()) throw std::invalid_argument("signature: asymmetric input");
  const std::size_t n = m.dim();
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m.at(i, j);

  std::vector<std::size_t> act(n);
  for (std::size_t i = 0; i < n; ++i) act[i] = i;

  SignatureTriple out;
  while (!act.empty()) {
    std::size_t piv_pos = act.size();
    for (std::size_t k = 0; k < act.size(); ++k)
      if (a[act[k]][act[k]] != 0) {
        piv_pos = k;
        break;
      }
    if (piv_pos < act.size()) {
      std::size_t p = act[piv_pos];
      if (a[p][p] > 0)
        ++out.p;
      else
        ++out.q;
      for (std::size_t rk = 0; rk < act.size(); ++rk) {
        std::size_t r = act[rk];
        if (r == p || a[r][p] == 0) continue;
        mpq_class f = a[r][p] / a[p][p];
        for (std::size_t ck = 0; ck < act.size(); ++ck) {
          std::size_t c = act[ck];
          if (c == p) continue;
          a[r][c] -= f * a[p][c];
        }
      }
      act.erase(act.begin() + static_cast<std::ptrdiff_t>(piv_pos));
      continue;
    }
    // All active diagonals zero: find first surviving off-diagonal pair.
    std::size_t bi = act.size(), bj = act.size();
    for (std::size_t ik = 0; ik < act.size() && bi == act.size(); ++ik)
      for (std::size_t jk = ik + 1; jk < act.size(); ++jk)
        if (a[act[ik]][act[jk]] != 0) {
          bi = ik;
          bj = jk;
          break;
        }
    if (bi == act.size()) {
      out.z += act.size();
      break;
    }
    std::size_t i = act[bi], j = act[bj];
    // Rows, then columns: e_i <- e_i + e_j, e_j <- e_i - e_j.
    for (std::size_t ck = 0; ck < act.size(); ++ck) {
      std::size_t c = act[ck];
      mpq_class ri = a[i][c], rj = a[j][c];
      a[i][c] = ri + rj;
      a[j][c] = ri - rj;
    }
    for (std::size_t rk = 0; rk < act.size(); ++rk) {
      std::size_t r = act[rk];
      mpq_class ci = a[r][i], cj = a[r][j];
      a[r][i] = ci + cj;
      a[r][j] = ci - cj;
    }
  }
  return out;
}

// Independent signature oracle: exact characteristic polynomial via
// Faddeev-LeVerrier, then root-sign counts by Descartes' rule on p(x) and
// p(-x). Valid because a symmetric matrix has only real eigenvalues.
inline SignatureTriple signature_oracle(const SymIntMatrix& m) {
  if (!m.is_symmetric()) throw std::invalid_argument("signature_oracle: asymmetric input");
  const std::size_t n = m.dim();
  if (n > 12) throw std::invalid_argument("signature_oracle: dimension above test bound 12");
  if (n == 0) return {};

  using Mat = std::vector<std::vector<mpq_class>>;
  auto mul = [n](const Mat& x, const Mat& y) {
    Mat r(n, std::vector<mpq_class>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        if (x[i][k] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) r[i][j] += x[i][k] * y[k][j];
      }
    return r;
  };

  Mat a(n, std::vector<mpq_class>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m.at(i, j);

  // p(x) = det(xI - A) = x^n + d[1] x^{n-1} + ... + d[n]
  std::vector<mpq_class> d(n + 1);
  d[0] = 1;
  Mat b(n, std::vector<mpq_class>(n));
  for (std::size_t i = 0; i < n; ++i) b[i][i] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    Mat c = mul(a, b);
    mpq_class tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += c[i][i];
    d[k] = -tr / static_cast<long>(k);
    b = c;
    for (std::size_t i = 0; i < n; ++i) b[i][i] += d[k];
  }

  std::size_t zeros = 0;
  while (zeros < n && d[n - zeros] == 0) ++zeros;

  auto sign_changes = [&](bool negate_odd_powers) {
    // Coefficient of x^{n-k} is d[k]; for p(-x) scale by (-1)^{n-k}.
    int changes = 0, last = 0;
    for (std::size_t k = 0; k <= n; ++k) {
      if (d[k] == 0) continue;
      int s = sgn(d[k]);
      if (negate_odd_powers && ((n - k) % 2 == 1)) s = -s;
      if (last != 0 && s != last) ++changes;
      last = s;
    }
    return static_cast<std::size_t>(changes);
  };

  SignatureTriple out;
  out.p = sign_changes(false);
  out.q = sign_changes(true);
  out.z = zeros;
  if (out.p + out.q + out.z != n)
    fail_internal("oracle", "Descartes count mismatch in signature oracle");
  return out;
}

}  // namespace eqsig
