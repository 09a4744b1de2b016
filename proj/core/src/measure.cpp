#include "cechspan/measure.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cechspan/snf.hpp"

namespace cechspan {

namespace {

bool perfect_square(const Integer& n, Integer& root) {
  if (n < 0) return false;
  root = sqrt(n);
  return root * root == n;
}

// Enclosure of √n with denominator 2^bits.
std::pair<Rational, Rational> sqrt_enclosure(const Integer& n, unsigned bits) {
  Integer scaled = n << (2 * bits);
  Integer r = sqrt(scaled);
  Integer den = Integer(1) << bits;
  if (r * r == scaled) return {Rational(r, den), Rational(r, den)};
  return {Rational(r, den), Rational(r + 1, den)};
}

}  // namespace

RootSum::RootSum(const Rational& r) {
  if (r != 0) terms_.emplace_back(r, Integer(1));
}

RootSum RootSum::sqrt_of(const Rational& s) {
  if (s < 0) throw PreconditionError("square root of a negative number");
  RootSum out;
  if (s == 0) return out;
  // √(a/b) = √(ab) / b
  Integer a = numerator(s), b = denominator(s);
  out.add_term(Rational(1, b), a * b);
  return out;
}

void RootSum::add_term(Rational c, Integer n) {
  if (c == 0) return;
  Integer root;
  if (perfect_square(n, root)) {
    c *= root;
    n = 1;
  }
  for (auto it = terms_.begin(); it != terms_.end(); ++it) {
    Integer r;
    if (it->second == n || perfect_square(it->second * n, r)) {
      // √n = √(n n') / n' · √n'
      Rational f = it->second == n ? Rational(1) : Rational(r, it->second);
      it->first += c * f;
      if (it->first == 0) terms_.erase(it);
      return;
    }
  }
  auto pos = std::lower_bound(terms_.begin(), terms_.end(), n,
                              [](const std::pair<Rational, Integer>& t, const Integer& v) { return t.second < v; });
  terms_.insert(pos, {std::move(c), std::move(n)});
}

RootSum& RootSum::operator+=(const RootSum& other) {
  for (const auto& [c, n] : other.terms_) add_term(c, n);
  return *this;
}

RootSum RootSum::scaled(const Rational& f) const {
  RootSum out;
  if (f == 0) return out;
  out.terms_ = terms_;
  for (auto& t : out.terms_) t.first *= f;
  return out;
}

bool RootSum::is_rational() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].second == 1);
}

std::pair<Rational, Rational> RootSum::enclose(unsigned bits) const {
  Rational lo = 0, hi = 0;
  for (const auto& [c, n] : terms_) {
    auto [a, b] = sqrt_enclosure(n, bits);
    if (c >= 0) {
      lo += c * a;
      hi += c * b;
    } else {
      lo += c * b;
      hi += c * a;
    }
  }
  return {lo, hi};
}

int RootSum::sign() const {
  if (terms_.empty()) return 0;
  for (unsigned bits = 32;; bits *= 2) {
    auto [lo, hi] = enclose(bits);
    if (lo > 0) return 1;
    if (hi < 0) return -1;
  }
}

double RootSum::approx() const {
  double v = 0;
  for (const auto& [c, n] : terms_) v += c.convert_to<double>() * std::sqrt(n.convert_to<double>());
  return v;
}

std::string RootSum::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& [c, n] = terms_[i];
    if (i) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << "-";
    Rational a = abs(c);
    if (n == 1) {
      out << to_string(a);
    } else {
      if (a != 1) out << to_string(a) << "*";
      out << "sqrt(" << n << ")";
    }
  }
  return out.str();
}

std::strong_ordering operator<=>(const RootSum& a, const RootSum& b) {
  int s = (a - b).sign();
  return s < 0 ? std::strong_ordering::less : s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

Rational squared_volume(const std::vector<Point>& points) {
  const std::size_t k = points.size();
  if (k == 0) throw PreconditionError("simplex without points");
  const int m = static_cast<int>(k) - 1;
  Matrix<Rational> cm(k + 1, k + 1, Rational(0));
  for (std::size_t i = 1; i <= k; ++i) cm(0, i) = cm(i, 0) = 1;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      Rational d2 = 0;
      for (std::size_t c = 0; c < points[i].size(); ++c) {
        Rational d = points[i][c] - points[j][c];
        d2 += d * d;
      }
      cm(i + 1, j + 1) = cm(j + 1, i + 1) = d2;
    }
  Rational det = determinant(cm);
  Integer fact = 1;
  for (int i = 2; i <= m; ++i) fact *= i;
  Rational scale = Rational(Integer(1) << m) * Rational(fact * fact);
  Rational v2 = det / scale;
  if ((m + 1) % 2 == 1) v2 = -v2;
  if (v2 < 0) throw std::logic_error("negative squared volume");
  return v2;
}

RootSum simplex_volume(const SimplicialComplex& k, const Simplex& s) {
  if (!k.has_coordinates()) throw PreconditionError("volume requires vertex coordinates");
  std::vector<Point> pts;
  for (VertexId v : s) pts.push_back(k.coordinates(v));
  return RootSum::sqrt_of(squared_volume(pts));
}

RootSum total_volume(const SimplicialComplex& k, int m) {
  RootSum total;
  if (m < 0 || m > k.dimension()) return total;
  if (!k.has_coordinates()) throw PreconditionError("volume requires vertex coordinates");
  for (const auto& s : k.simplices(m)) total += simplex_volume(k, s);
  return total;
}

}  // namespace cechspan
