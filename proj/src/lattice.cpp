#include "minklen/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace minklen {

IntMatrix identity_matrix(std::size_t d) {
  IntMatrix m(d, LatticePoint(d, 0));
  for (std::size_t i = 0; i < d; ++i) m[i][i] = 1;
  return m;
}

LatticePoint transform(const IntMatrix& m, const LatticePoint& x) {
  LatticePoint r(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i) r[i] = dot(m[i], x);
  return r;
}

Integer determinant(const IntMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw std::invalid_argument("matrix is not square");
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
  }
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(a[k], a[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  BigInt det = a[n - 1][n - 1] * sign;
  return det.convert_to<Integer>();
}

std::size_t rank(const std::vector<LatticePoint>& vectors) {
  if (vectors.empty()) return 0;
  const std::size_t cols = vectors.front().size();
  std::vector<std::vector<Rational>> a;
  for (const auto& v : vectors) a.emplace_back(v.begin(), v.end());
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      if (a[i][c] == 0) continue;
      Rational f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

SpanBasis adapted_basis(const std::vector<LatticePoint>& vectors,
                        std::size_t dim) {
  // Row-reduce the d x r matrix whose columns are the vectors with unimodular
  // row operations, recording them in U (and U^{-1} via the inverse column
  // operations).
  const std::size_t r = vectors.size();
  IntMatrix a(dim, LatticePoint(r, 0));
  for (std::size_t j = 0; j < r; ++j) {
    if (vectors[j].size() != dim) throw std::invalid_argument("dimension mismatch");
    for (std::size_t i = 0; i < dim; ++i) a[i][j] = vectors[j][i];
  }
  IntMatrix u = identity_matrix(dim);
  IntMatrix uinv = identity_matrix(dim);

  // row_i <- x*row_i + y*row_k ; row_k <- p*row_i + q*row_k with xq - yp = +-1
  auto combine = [&](std::size_t i, std::size_t k, Integer x, Integer y,
                     Integer p, Integer q) {
    auto mix = [&](IntMatrix& m) {
      for (std::size_t c = 0; c < m[i].size(); ++c) {
        Integer vi = m[i][c], vk = m[k][c];
        m[i][c] = x * vi + y * vk;
        m[k][c] = p * vi + q * vk;
      }
    };
    mix(a);
    mix(u);
    // Columns of U^{-1} transform by the inverse 2x2 block.
    Integer det = x * q - y * p;
    for (std::size_t row = 0; row < dim; ++row) {
      Integer ci = uinv[row][i], ck = uinv[row][k];
      uinv[row][i] = det * (q * ci - p * ck);
      uinv[row][k] = det * (-y * ci + x * ck);
    }
  };

  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < r && pivot_row < dim; ++col) {
    for (std::size_t i = pivot_row + 1; i < dim; ++i) {
      if (a[i][col] == 0) continue;
      Integer s = a[pivot_row][col], t = a[i][col];
      // Extended Euclid: g = x*s + y*t.
      Integer old_r = s, rr = t, old_x = 1, xx = 0, old_y = 0, yy = 1;
      while (rr != 0) {
        Integer qt = old_r / rr;
        Integer tmp = old_r - qt * rr;
        old_r = rr;
        rr = tmp;
        tmp = old_x - qt * xx;
        old_x = xx;
        xx = tmp;
        tmp = old_y - qt * yy;
        old_y = yy;
        yy = tmp;
      }
      Integer g = old_r;
      // New pivot row = old_x*row_p + old_y*row_i; new row_i = (-t/g)*row_p + (s/g)*row_i.
      combine(pivot_row, i, old_x, old_y, -t / g, s / g);
    }
    if (a[pivot_row][col] != 0) ++pivot_row;
  }
  return {u, uinv, pivot_row};
}

Integer normalized_parallelepiped_volume(const std::vector<LatticePoint>& vectors) {
  if (vectors.empty()) return 1;
  const std::size_t dim = vectors.front().size();
  const std::size_t k = vectors.size();
  // gcd over all k x k minors.
  Integer g = 0;
  std::vector<std::size_t> rows(k);
  std::vector<bool> pick(dim, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
  std::sort(pick.begin(), pick.end(), std::greater<>());
  do {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < dim; ++i) {
      if (pick[i]) rows[idx++] = i;
    }
    IntMatrix minor(k, LatticePoint(k));
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = 0; b < k; ++b) minor[a][b] = vectors[b][rows[a]];
    }
    g = std::gcd(g, std::abs(determinant(minor)));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return g;
}

std::optional<RationalPoint> coordinates_in(const std::vector<LatticePoint>& basis,
                                            const LatticePoint& v) {
  const std::size_t k = basis.size();
  const std::size_t dim = v.size();
  // Solve sum x_j basis_j = v by elimination on the augmented d x (k+1) system.
  std::vector<std::vector<Rational>> a(dim, std::vector<Rational>(k + 1));
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < k; ++j) a[i][j] = basis[j][i];
    a[i][k] = v[i];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < k && r < dim; ++c) {
    std::size_t p = r;
    while (p < dim && a[p][c] == 0) ++p;
    if (p == dim) continue;
    std::swap(a[p], a[r]);
    Rational inv = 1 / a[r][c];
    for (std::size_t j = c; j <= k; ++j) a[r][j] *= inv;
    for (std::size_t i = 0; i < dim; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (std::size_t j = c; j <= k; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  if (r != k) throw std::invalid_argument("basis vectors are linearly dependent");
  for (std::size_t i = r; i < dim; ++i) {
    if (a[i][k] != 0) return std::nullopt;
  }
  RationalPoint x(k);
  for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = a[i][k];
  return x;
}

}  // namespace minklen
