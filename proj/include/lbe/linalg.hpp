#pragma once

#include <cassert>
#include <cmath>
#include <stdexcept>
#include <vector>

// Small dense linear algebra for chart-sized problems (n <= ~8).
// Row-major storage, runtime dimensions.

namespace lbe {

using Vec = std::vector<double>;

struct Mat {
  int rows = 0, cols = 0;
  std::vector<double> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0.0) {}

  double& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  double operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }
  static Mat zero(int r, int c) { return Mat(r, c); }
};

inline Mat operator+(const Mat& x, const Mat& y) {
  assert(x.rows == y.rows && x.cols == y.cols);
  Mat r = x;
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] += y.a[i];
  return r;
}

inline Mat operator-(const Mat& x, const Mat& y) {
  assert(x.rows == y.rows && x.cols == y.cols);
  Mat r = x;
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] -= y.a[i];
  return r;
}

inline Mat operator*(double s, const Mat& x) {
  Mat r = x;
  for (auto& v : r.a) v *= s;
  return r;
}

inline Mat operator*(const Mat& x, const Mat& y) {
  assert(x.cols == y.rows);
  Mat r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      double xik = x(i, k);
      if (xik == 0.0) continue;
      for (int j = 0; j < y.cols; ++j) r(i, j) += xik * y(k, j);
    }
  return r;
}

inline Vec operator*(const Mat& x, const Vec& v) {
  assert(x.cols == static_cast<int>(v.size()));
  Vec r(x.rows, 0.0);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) r[i] += x(i, j) * v[j];
  return r;
}

inline Mat transpose(const Mat& x) {
  Mat r(x.cols, x.rows);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) r(j, i) = x(i, j);
  return r;
}

inline double trace(const Mat& x) {
  assert(x.rows == x.cols);
  double t = 0.0;
  for (int i = 0; i < x.rows; ++i) t += x(i, i);
  return t;
}

inline double frobenius_norm(const Mat& x) {
  double s = 0.0;
  for (double v : x.a) s += v * v;
  return std::sqrt(s);
}

inline double max_abs(const Mat& x) {
  double m = 0.0;
  for (double v : x.a) m = std::max(m, std::fabs(v));
  return m;
}

inline double dot(const Vec& u, const Vec& v) {
  assert(u.size() == v.size());
  double s = 0.0;
  for (size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
  return s;
}

// u^T g v with a (0,2)-tensor g.
inline double inner(const Mat& g, const Vec& u, const Vec& v) {
  assert(g.rows == static_cast<int>(u.size()) && g.cols == static_cast<int>(v.size()));
  double s = 0.0;
  for (int i = 0; i < g.rows; ++i)
    for (int j = 0; j < g.cols; ++j) s += g(i, j) * u[i] * v[j];
  return s;
}

// LU decomposition with partial pivoting; returns false on (near-)singularity.
struct Lu {
  Mat lu;
  std::vector<int> perm;
  int sign = 1;
  bool ok = false;
};

inline Lu lu_decompose(const Mat& m, double pivot_tol = 0.0) {
  assert(m.rows == m.cols);
  int n = m.rows;
  Lu f;
  f.lu = m;
  f.perm.resize(n);
  for (int i = 0; i < n; ++i) f.perm[i] = i;
  for (int k = 0; k < n; ++k) {
    int p = k;
    double best = std::fabs(f.lu(k, k));
    for (int i = k + 1; i < n; ++i)
      if (std::fabs(f.lu(i, k)) > best) {
        best = std::fabs(f.lu(i, k));
        p = i;
      }
    if (best <= pivot_tol) return f;  // ok stays false
    if (p != k) {
      for (int j = 0; j < n; ++j) std::swap(f.lu(k, j), f.lu(p, j));
      std::swap(f.perm[k], f.perm[p]);
      f.sign = -f.sign;
    }
    for (int i = k + 1; i < n; ++i) {
      f.lu(i, k) /= f.lu(k, k);
      double lik = f.lu(i, k);
      for (int j = k + 1; j < n; ++j) f.lu(i, j) -= lik * f.lu(k, j);
    }
  }
  f.ok = true;
  return f;
}

inline double determinant(const Mat& m) {
  int n = m.rows;
  Lu f = lu_decompose(m);
  if (!f.ok) {
    // exact or near-exact singularity: determinant is (close to) zero
    double d = f.sign;
    for (int i = 0; i < n; ++i) d *= f.lu(i, i);
    return d;
  }
  double d = f.sign;
  for (int i = 0; i < n; ++i) d *= f.lu(i, i);
  return d;
}

inline Vec lu_solve(const Lu& f, const Vec& b) {
  int n = f.lu.rows;
  Vec x(n);
  for (int i = 0; i < n; ++i) x[i] = b[f.perm[i]];
  for (int i = 1; i < n; ++i)
    for (int j = 0; j < i; ++j) x[i] -= f.lu(i, j) * x[j];
  for (int i = n - 1; i >= 0; --i) {
    for (int j = i + 1; j < n; ++j) x[i] -= f.lu(i, j) * x[j];
    x[i] /= f.lu(i, i);
  }
  return x;
}

inline Mat inverse(const Mat& m) {
  int n = m.rows;
  Lu f = lu_decompose(m);
  if (!f.ok) throw std::runtime_error("linalg: singular matrix in inverse()");
  Mat inv(n, n);
  Vec e(n, 0.0);
  for (int j = 0; j < n; ++j) {
    e.assign(n, 0.0);
    e[j] = 1.0;
    Vec col = lu_solve(f, e);
    for (int i = 0; i < n; ++i) inv(i, j) = col[i];
  }
  return inv;
}

// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations.
inline Vec symmetric_eigenvalues(Mat m) {
  assert(m.rows == m.cols);
  int n = m.rows;
  for (int sweep = 0; sweep < 64; ++sweep) {
    double off = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off += m(i, j) * m(i, j);
    if (off < 1e-30) break;
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q) {
        if (std::fabs(m(p, q)) < 1e-300) continue;
        double theta = (m(q, q) - m(p, p)) / (2.0 * m(p, q));
        double t = (theta >= 0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
        for (int k = 0; k < n; ++k) {
          double mkp = m(k, p), mkq = m(k, q);
          m(k, p) = c * mkp - s * mkq;
          m(k, q) = s * mkp + c * mkq;
        }
        for (int k = 0; k < n; ++k) {
          double mpk = m(p, k), mqk = m(q, k);
          m(p, k) = c * mpk - s * mqk;
          m(q, k) = s * mpk + c * mqk;
        }
      }
  }
  Vec ev(n);
  for (int i = 0; i < n; ++i) ev[i] = m(i, i);
  return ev;
}

}  // namespace lbe
