#include "cechspan/snf.hpp"

#include <cstdint>
#include <limits>
#include <sstream>

namespace cechspan {

IntMatrix int_matrix(const std::vector<std::vector<long long>>& rows) {
  std::size_t r = rows.size(), c = rows.empty() ? 0 : rows[0].size();
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw PreconditionError("ragged matrix literal");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

std::vector<Integer> multiply(const IntMatrix& m, const std::vector<Integer>& x) {
  if (m.cols() != x.size()) throw PreconditionError("matrix-vector shape mismatch");
  std::vector<Integer> y(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) y[i] += m(i, j) * x[j];
  return y;
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << '[';
    for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? " " : "") << m(i, j);
    out << "]\n";
  }
  return out.str();
}

std::vector<Integer> SmithForm::diagonal() const {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i) out.push_back(d(i, i));
  return out;
}

namespace {

struct Overflow {};

// Signed 64-bit scalar that throws Overflow instead of wrapping.
struct Checked {
  std::int64_t v = 0;
  Checked() = default;
  Checked(std::int64_t x) : v(x) {}

  friend Checked operator+(Checked a, Checked b) {
    std::int64_t r;
    if (__builtin_add_overflow(a.v, b.v, &r)) throw Overflow{};
    return r;
  }
  friend Checked operator-(Checked a, Checked b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a.v, b.v, &r)) throw Overflow{};
    return r;
  }
  friend Checked operator*(Checked a, Checked b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a.v, b.v, &r)) throw Overflow{};
    return r;
  }
  friend Checked operator/(Checked a, Checked b) {
    if (a.v == std::numeric_limits<std::int64_t>::min() && b.v == -1) throw Overflow{};
    return a.v / b.v;
  }
  friend Checked operator%(Checked a, Checked b) {
    if (b.v == -1) return 0;
    return a.v % b.v;
  }
  Checked operator-() const {
    if (v == std::numeric_limits<std::int64_t>::min()) throw Overflow{};
    return -v;
  }
  friend bool operator==(Checked a, Checked b) { return a.v == b.v; }
  friend bool operator<(Checked a, Checked b) { return a.v < b.v; }
};

Checked abs_of(Checked x) { return x.v < 0 ? -x : x; }
Integer abs_of(const Integer& x) { return abs(x); }
bool is_zero(Checked x) { return x.v == 0; }
bool is_zero(const Integer& x) { return x == 0; }
bool negative(Checked x) { return x.v < 0; }
bool negative(const Integer& x) { return x < 0; }
Integer to_integer(Checked x) { return Integer(x.v); }
Integer to_integer(const Integer& x) { return x; }

template <class T>
Matrix<T> convert_in(const IntMatrix& m) {
  Matrix<T> out(m.rows(), m.cols(), T(0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if constexpr (std::is_same_v<T, Checked>) {
        if (m(i, j) > std::numeric_limits<std::int64_t>::max() || m(i, j) < std::numeric_limits<std::int64_t>::min())
          throw Overflow{};
        out(i, j) = Checked(static_cast<std::int64_t>(m(i, j)));
      } else {
        out(i, j) = m(i, j);
      }
    }
  return out;
}

template <class T>
IntMatrix convert_out(const Matrix<T>& m) {
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = to_integer(m(i, j));
  return out;
}

template <class T>
class Reducer {
 public:
  Reducer(Matrix<T> a, SmithOptions opt) : a_(std::move(a)), opt_(opt) {
    const std::size_t r = a_.rows(), c = a_.cols();
    if (opt_.track_u) u_ = Matrix<T>::identity(r);
    if (opt_.track_v) v_ = Matrix<T>::identity(c);
    if (opt_.track_inverses) {
      ui_ = Matrix<T>::identity(r);
      vi_ = Matrix<T>::identity(c);
    }
  }

  SmithForm run() {
    const std::size_t r = a_.rows(), c = a_.cols();
    std::size_t t = 0;
    for (; t < std::min(r, c); ++t) {
      std::size_t pr = 0, pc = 0;
      if (!min_pivot(t, t, pr, pc)) break;
      swap_rows(t, pr);
      swap_cols(t, pc);
      for (;;) {
        bool clean = true;
        for (std::size_t i = t + 1; i < r; ++i) {
          if (is_zero(a_(i, t))) continue;
          T q = a_(i, t) / a_(t, t);
          if (!is_zero(q)) add_row(i, t, -q);
          if (!is_zero(a_(i, t))) clean = false;
        }
        for (std::size_t j = t + 1; j < c; ++j) {
          if (is_zero(a_(t, j))) continue;
          T q = a_(t, j) / a_(t, t);
          if (!is_zero(q)) add_col(j, t, -q);
          if (!is_zero(a_(t, j))) clean = false;
        }
        if (!clean) {
          // Bring the smallest remainder into the pivot; |pivot| strictly decreases.
          std::size_t best_i = t, best_j = t;
          T best = abs_of(a_(t, t));
          for (std::size_t i = t + 1; i < r; ++i)
            if (!is_zero(a_(i, t)) && abs_of(a_(i, t)) < best) best = abs_of(a_(i, t)), best_i = i, best_j = t;
          for (std::size_t j = t + 1; j < c; ++j)
            if (!is_zero(a_(t, j)) && abs_of(a_(t, j)) < best) best = abs_of(a_(t, j)), best_i = t, best_j = j;
          if (best_i != t) swap_rows(t, best_i);
          if (best_j != t) swap_cols(t, best_j);
          continue;
        }
        bool divisible = true;
        for (std::size_t i = t + 1; i < r && divisible; ++i)
          for (std::size_t j = t + 1; j < c; ++j)
            if (!is_zero(a_(i, j) % a_(t, t))) {
              add_row(t, i, T(1));
              divisible = false;
              break;
            }
        if (divisible) break;
      }
      if (negative(a_(t, t))) negate_row(t);
    }
    SmithForm out;
    out.rank = t;
    out.d = convert_out(a_);
    if (opt_.track_u) out.u = convert_out(u_);
    if (opt_.track_v) out.v = convert_out(v_);
    if (opt_.track_inverses) {
      out.u_inv = convert_out(ui_);
      out.v_inv = convert_out(vi_);
    }
    return out;
  }

 private:
  bool min_pivot(std::size_t r0, std::size_t c0, std::size_t& pr, std::size_t& pc) const {
    bool found = false;
    T best(0);
    for (std::size_t i = r0; i < a_.rows(); ++i)
      for (std::size_t j = c0; j < a_.cols(); ++j) {
        if (is_zero(a_(i, j))) continue;
        T m = abs_of(a_(i, j));
        if (!found || m < best) {
          found = true;
          best = m;
          pr = i;
          pc = j;
        }
      }
    return found;
  }

  void swap_rows(std::size_t i, std::size_t k) {
    if (i == k) return;
    for (std::size_t j = 0; j < a_.cols(); ++j) std::swap(a_(i, j), a_(k, j));
    if (opt_.track_u)
      for (std::size_t j = 0; j < u_.cols(); ++j) std::swap(u_(i, j), u_(k, j));
    if (opt_.track_inverses)
      for (std::size_t j = 0; j < ui_.rows(); ++j) std::swap(ui_(j, i), ui_(j, k));
  }

  void swap_cols(std::size_t j, std::size_t k) {
    if (j == k) return;
    for (std::size_t i = 0; i < a_.rows(); ++i) std::swap(a_(i, j), a_(i, k));
    if (opt_.track_v)
      for (std::size_t i = 0; i < v_.rows(); ++i) std::swap(v_(i, j), v_(i, k));
    if (opt_.track_inverses)
      for (std::size_t i = 0; i < vi_.cols(); ++i) std::swap(vi_(j, i), vi_(k, i));
  }

  // row_i += f * row_k
  void add_row(std::size_t i, std::size_t k, const T& f) {
    for (std::size_t j = 0; j < a_.cols(); ++j)
      if (!is_zero(a_(k, j))) a_(i, j) = a_(i, j) + f * a_(k, j);
    if (opt_.track_u)
      for (std::size_t j = 0; j < u_.cols(); ++j)
        if (!is_zero(u_(k, j))) u_(i, j) = u_(i, j) + f * u_(k, j);
    if (opt_.track_inverses)
      for (std::size_t j = 0; j < ui_.rows(); ++j)
        if (!is_zero(ui_(j, i))) ui_(j, k) = ui_(j, k) - f * ui_(j, i);
  }

  // col_j += f * col_k
  void add_col(std::size_t j, std::size_t k, const T& f) {
    for (std::size_t i = 0; i < a_.rows(); ++i)
      if (!is_zero(a_(i, k))) a_(i, j) = a_(i, j) + f * a_(i, k);
    if (opt_.track_v)
      for (std::size_t i = 0; i < v_.rows(); ++i)
        if (!is_zero(v_(i, k))) v_(i, j) = v_(i, j) + f * v_(i, k);
    if (opt_.track_inverses)
      for (std::size_t i = 0; i < vi_.cols(); ++i)
        if (!is_zero(vi_(j, i))) vi_(k, i) = vi_(k, i) - f * vi_(j, i);
  }

  void negate_row(std::size_t i) {
    for (std::size_t j = 0; j < a_.cols(); ++j) a_(i, j) = -a_(i, j);
    if (opt_.track_u)
      for (std::size_t j = 0; j < u_.cols(); ++j) u_(i, j) = -u_(i, j);
    if (opt_.track_inverses)
      for (std::size_t j = 0; j < ui_.rows(); ++j) ui_(j, i) = -ui_(j, i);
  }

  Matrix<T> a_, u_, v_, ui_, vi_;
  SmithOptions opt_;
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m, SmithOptions options) {
  try {
    return Reducer<Checked>(convert_in<Checked>(m), options).run();
  } catch (const Overflow&) {
    return Reducer<Integer>(m, options).run();
  }
}

Rational determinant(Matrix<Rational> m) {
  if (m.rows() != m.cols()) throw PreconditionError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  Rational det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) return Rational(0);
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m(r, c) == 0) continue;
      Rational f = m(r, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(r, j) -= f * m(c, j);
    }
  }
  return det;
}

}  // namespace cechspan
