#include "towog/exact.hpp"

#include <algorithm>
#include <utility>

namespace towog {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  a_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) fail(errc::length_mismatch, "ragged initializer for IntMatrix");
    for (long x : r) a_.emplace_back(x);
  }
}

std::vector<Int> mat_vec(const IntMatrix& m, const std::vector<Int>& v) {
  if (v.size() != m.cols()) fail(errc::length_mismatch, "mat_vec: vector length != cols");
  std::vector<Int> out(m.rows(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0 && v[j] != 0) out[i] += m(i, j) * v[j];
  return out;
}

Int determinant(const IntMatrix& input) {
  if (input.rows() != input.cols()) fail(errc::not_square, "determinant of non-square matrix");
  const std::size_t n = input.rows();
  if (n == 0) return 1;
  IntMatrix m = input;
  int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t piv = k;
    while (piv < n && m(piv, k) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      for (std::size_t j = k; j < n; ++j) std::swap(m(k, j), m(piv, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int t = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign > 0 ? m(n - 1, n - 1) : Int(-m(n - 1, n - 1));
}

std::size_t rank(const IntMatrix& input) {
  IntMatrix m = input;
  const std::size_t nr = m.rows(), nc = m.cols();
  std::size_t r = 0;
  Int prev = 1;
  for (std::size_t c = 0; c < nc && r < nr; ++c) {
    std::size_t piv = r;
    while (piv < nr && m(piv, c) == 0) ++piv;
    if (piv == nr) continue;
    if (piv != r)
      for (std::size_t j = c; j < nc; ++j) std::swap(m(r, j), m(piv, j));
    for (std::size_t i = r + 1; i < nr; ++i) {
      for (std::size_t j = c + 1; j < nc; ++j) {
        Int t = m(r, c) * m(i, j) - m(i, c) * m(r, j);
        mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, c) = 0;
    }
    prev = m(r, c);
    ++r;
  }
  return r;
}

namespace {

struct Rref {
  std::vector<std::vector<Rat>> rows;  // reduced row echelon form
  std::vector<std::size_t> pivot_cols;
  std::vector<std::size_t> free_cols;
};

Rref rref_of(const IntMatrix& m) {
  const std::size_t nr = m.rows(), nc = m.cols();
  std::vector<std::vector<Rat>> a(nr, std::vector<Rat>(nc));
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) a[i][j] = Rat(m(i, j));
  Rref out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < nc && r < nr; ++c) {
    std::size_t piv = r;
    while (piv < nr && a[piv][c] == 0) ++piv;
    if (piv == nr) continue;
    std::swap(a[r], a[piv]);
    Rat inv = a[r][c];
    for (std::size_t j = c; j < nc; ++j) a[r][j] /= inv;
    for (std::size_t i = 0; i < nr; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rat f = a[i][c];
      for (std::size_t j = c; j < nc; ++j) a[i][j] -= f * a[r][j];
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  std::size_t p = 0;
  for (std::size_t c = 0; c < nc; ++c) {
    if (p < out.pivot_cols.size() && out.pivot_cols[p] == c)
      ++p;
    else
      out.free_cols.push_back(c);
  }
  out.rows = std::move(a);
  return out;
}

}  // namespace

std::vector<std::vector<Rat>> null_space_basis(const IntMatrix& m) {
  Rref rr = rref_of(m);
  std::vector<std::vector<Rat>> basis;
  basis.reserve(rr.free_cols.size());
  for (std::size_t f : rr.free_cols) {
    std::vector<Rat> v(m.cols(), Rat(0));
    v[f] = 1;
    for (std::size_t r = 0; r < rr.pivot_cols.size(); ++r) v[rr.pivot_cols[r]] = -rr.rows[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Int> primitive_integer_vector(const std::vector<Rat>& v) {
  bool nonzero = false;
  Int den_lcm = 1;
  for (const Rat& x : v) {
    if (x != 0) nonzero = true;
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den().get_mpz_t());
  }
  if (!nonzero) fail(errc::zero_vector, "primitive_integer_vector of zero vector");
  std::vector<Int> w(v.size());
  Int g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    Rat scaled = v[i] * Rat(den_lcm);
    w[i] = scaled.get_num();  // denominator is 1 after scaling
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), w[i].get_mpz_t());
  }
  for (Int& x : w) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  for (const Int& x : w) {
    if (x == 0) continue;
    if (x < 0)
      for (Int& y : w) y = -y;
    break;
  }
  return w;
}

std::vector<std::vector<Int>> bounded_integer_kernel(const IntMatrix& m, long bound) {
  if (bound < 1) throw std::invalid_argument("bounded_integer_kernel: bound must be >= 1");
  Rref rr = rref_of(m);
  const std::size_t d = rr.free_cols.size();
  std::vector<std::vector<Int>> out;
  if (d == 0) return out;
  std::vector<long> assign(d, -bound);
  while (true) {
    bool all_zero = true;
    for (long x : assign)
      if (x != 0) all_zero = false;
    if (!all_zero) {
      std::vector<Int> u(m.cols(), 0);
      for (std::size_t k = 0; k < d; ++k) u[rr.free_cols[k]] = assign[k];
      bool ok = true;
      for (std::size_t r = 0; r < rr.pivot_cols.size() && ok; ++r) {
        Rat x = 0;
        for (std::size_t k = 0; k < d; ++k)
          if (assign[k] != 0) x -= rr.rows[r][rr.free_cols[k]] * Rat(assign[k]);
        if (x.get_den() != 1 || abs(x.get_num()) > bound)
          ok = false;
        else
          u[rr.pivot_cols[r]] = x.get_num();
      }
      if (ok) out.push_back(std::move(u));
    }
    std::size_t k = d;
    while (k > 0 && assign[k - 1] == bound) assign[--k] = -bound;
    if (k == 0) break;
    ++assign[k - 1];
  }
  return out;
}

}  // namespace towog
