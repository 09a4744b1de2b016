#include "cechspan/linking.hpp"

#include <algorithm>
#include <set>

#include "cechspan/geometry.hpp"
#include "cechspan/spanning.hpp"

namespace cechspan {

PolyLoop PolyLoop::make(std::vector<Point> points) {
  if (points.size() < 3) throw PreconditionError("a loop needs at least three points");
  for (const auto& p : points)
    if (p.size() != 3) throw PreconditionError("loop points must lie in R^3");
  for (std::size_t i = 0; i < points.size(); ++i)
    if (points[i] == points[(i + 1) % points.size()])
      throw PreconditionError("consecutive loop points coincide at index " + std::to_string(i));
  return PolyLoop(std::move(points));
}

PolyLoop PolyLoop::reversed() const {
  std::vector<Point> p(points_.rbegin(), points_.rend());
  return PolyLoop(std::move(p));
}

PolyLoop PolyLoop::translated(const Point& offset) const {
  std::vector<Point> p = points_;
  for (auto& x : p)
    for (std::size_t k = 0; k < 3; ++k) x[k] += offset[k];
  return PolyLoop(std::move(p));
}

PolyLoop PolyLoop::repeated(int times) const {
  if (times < 1) throw PreconditionError("repeat count must be positive");
  std::vector<Point> p;
  for (int i = 0; i < times; ++i) p.insert(p.end(), points_.begin(), points_.end());
  return PolyLoop(std::move(p));
}

const std::vector<Point>& projection_directions() {
  static const std::vector<Point> dirs = [] {
    std::vector<Point> out;
    std::vector<int> base{1, 3, 7};
    const int signs[4][3] = {{1, 1, 1}, {1, -1, 1}, {1, 1, -1}, {-1, 1, 1}};
    do {
      for (const auto& s : signs)
        out.push_back({Rational(s[0] * base[0]), Rational(s[1] * base[1]), Rational(s[2] * base[2])});
    } while (std::next_permutation(base.begin(), base.end()));
    return out;
  }();
  return dirs;
}

namespace {

struct Projected {
  Point uv;  // planar coordinates
  Rational height;
};

std::vector<Projected> project(const PolyLoop& l, const Point& u, const Point& v, const Point& d) {
  std::vector<Projected> out;
  for (const auto& p : l.points()) out.push_back({{dot(p, u), dot(p, v)}, dot(p, d)});
  return out;
}

bool on_segment2d(const Point& p, const Point& a, const Point& b) {
  if (orient2d(a, b, p) != 0) return false;
  for (int k = 0; k < 2; ++k)
    if (p[k] < std::min(a[k], b[k]) || p[k] > std::max(a[k], b[k])) return false;
  return true;
}

Point apply_shear(const Point& p, int round) {
  // Upper unitriangular, so orientation and linking are preserved.
  const Rational a(1, 3 + 2 * round), b(1, 5 + 2 * round), c(1, 7 + 2 * round);
  return {p[0] + a * p[1] + b * p[2], p[1] + c * p[2], p[2]};
}

PolyLoop sheared(const PolyLoop& l, int round) {
  std::vector<Point> p;
  for (const auto& x : l.points()) p.push_back(apply_shear(x, round));
  return PolyLoop::make(std::move(p));
}

}  // namespace

std::optional<long> linking_number_along(const PolyLoop& a, const PolyLoop& b, const Point& d) {
  if (d.size() != 3 || (d[0] == 0 && d[1] == 0 && d[2] == 0)) throw PreconditionError("bad projection direction");
  Point u = (d[0] != 0 || d[1] != 0) ? Point{-d[1], d[0], Rational(0)} : Point{Rational(1), Rational(0), Rational(0)};
  Point v = cross(d, u);  // u × v is a positive multiple of d
  auto pa = project(a, u, v, d), pb = project(b, u, v, d);
  const std::size_t na = pa.size(), nb = pb.size();
  long sum = 0;
  for (std::size_t i = 0; i < na; ++i) {
    const auto &p0 = pa[i], &p1 = pa[(i + 1) % na];
    if (p0.uv == p1.uv) return std::nullopt;
    for (std::size_t j = 0; j < nb; ++j) {
      const auto &q0 = pb[j], &q1 = pb[(j + 1) % nb];
      if (q0.uv == q1.uv) return std::nullopt;
      if (on_segment2d(p0.uv, q0.uv, q1.uv) || on_segment2d(p1.uv, q0.uv, q1.uv) ||
          on_segment2d(q0.uv, p0.uv, p1.uv) || on_segment2d(q1.uv, p0.uv, p1.uv))
        return std::nullopt;
      const int o1 = orient2d(q0.uv, q1.uv, p0.uv), o2 = orient2d(q0.uv, q1.uv, p1.uv);
      const int o3 = orient2d(p0.uv, p1.uv, q0.uv), o4 = orient2d(p0.uv, p1.uv, q1.uv);
      if (o1 == o2 || o3 == o4) continue;
      // Crossing parameters along each segment.
      auto area = [](const Point& x, const Point& y, const Point& z) {
        return (y[0] - x[0]) * (z[1] - x[1]) - (y[1] - x[1]) * (z[0] - x[0]);
      };
      const Rational s = area(q0.uv, q1.uv, p0.uv) / (area(q0.uv, q1.uv, p0.uv) - area(q0.uv, q1.uv, p1.uv));
      const Rational t = area(p0.uv, p1.uv, q0.uv) / (area(p0.uv, p1.uv, q0.uv) - area(p0.uv, p1.uv, q1.uv));
      const Rational ha = p0.height + s * (p1.height - p0.height);
      const Rational hb = q0.height + t * (q1.height - q0.height);
      if (ha == hb) throw PreconditionError("loops intersect");
      const Point da = sub(p1.uv, p0.uv), db = sub(q1.uv, q0.uv);
      const Rational c = ha > hb ? da[0] * db[1] - da[1] * db[0] : db[0] * da[1] - db[1] * da[0];
      sum += c > 0 ? 1 : -1;
    }
  }
  if (sum % 2 != 0) throw std::logic_error("odd crossing sum in a generic projection");
  return sum / 2;
}

bool loops_intersect(const PolyLoop& a, const PolyLoop& b) {
  const auto &pa = a.points(), &pb = b.points();
  for (std::size_t i = 0; i < pa.size(); ++i)
    for (std::size_t j = 0; j < pb.size(); ++j)
      if (hulls_intersect({pa[i], pa[(i + 1) % pa.size()]}, {pb[j], pb[(j + 1) % pb.size()]})) return true;
  return false;
}

long linking_number(const PolyLoop& a, const PolyLoop& b) {
  if (loops_intersect(a, b)) throw PreconditionError("loops intersect");
  for (int round = 0; round < 4; ++round) {
    const PolyLoop sa = round ? sheared(a, round) : a, sb = round ? sheared(b, round) : b;
    for (const auto& d : projection_directions())
      if (auto v = linking_number_along(sa, sb, d)) return *v;
  }
  throw std::runtime_error("no generic projection direction found");
}

std::vector<PolyLoop> loops_of(const SimplicialComplex& a) {
  if (!a.has_coordinates() || a.ambient_dimension() != 3) throw PreconditionError("loops need coordinates in R^3");
  std::vector<PolyLoop> out;
  for (const auto& comp : connected_components(a)) {
    if (comp.dimension() != 1) throw PreconditionError("boundary component is not a circle");
    std::map<VertexId, std::vector<VertexId>> nbr;
    for (const auto& e : comp.simplices(1)) {
      nbr[e[0]].push_back(e[1]);
      nbr[e[1]].push_back(e[0]);
    }
    for (const auto& [v, ns] : nbr)
      if (ns.size() != 2) throw PreconditionError("vertex " + std::to_string(v) + " does not have degree two");
    const VertexId start = comp.vertices().front();
    std::vector<Point> pts{a.coordinates(start)};
    VertexId prev = start, cur = std::min(nbr[start][0], nbr[start][1]);
    while (cur != start) {
      pts.push_back(a.coordinates(cur));
      const auto& ns = nbr[cur];
      VertexId next = ns[0] == prev ? ns[1] : ns[0];
      prev = cur;
      cur = next;
    }
    out.push_back(PolyLoop::make(std::move(pts)));
  }
  return out;
}

std::string to_string(DualityOutcome::Status s) {
  switch (s) {
    case DualityOutcome::Status::Meets: return "meets";
    case DualityOutcome::Status::Misses: return "MISSES";
    case DualityOutcome::Status::Skipped: return "skipped";
  }
  return "?";
}

std::vector<DualityOutcome> duality_necessity_check(const SimplicialComplex& x, const SimplicialComplex& a,
                                                    const std::vector<PolyLoop>& loops) {
  if (!x.has_coordinates() || x.ambient_dimension() != 3) throw PreconditionError("X needs coordinates in R^3");
  if (!a.is_subcomplex_of(x)) throw PreconditionError("A is not contained in X");
  const auto ring = CoefficientSpec::integers();
  if (!spans(x, a, 2, ring, canonical_L(a, 2, ring))) throw PreconditionError("X does not span the canonical class set");
  const auto components = loops_of(a);

  std::vector<std::vector<Point>> cells;
  for (const auto& f : x.facets()) {
    std::vector<Point> pts;
    for (VertexId v : f) pts.push_back(x.coordinates(v));
    cells.push_back(std::move(pts));
  }

  std::vector<DualityOutcome> out;
  for (std::size_t g = 0; g < loops.size(); ++g) {
    DualityOutcome o;
    const auto& loop = loops[g];
    bool valid = true;
    for (const auto& c : components) {
      if (loops_intersect(loop, c)) {
        valid = false;
        o.detail = "loop meets A";
        break;
      }
      o.profile.push_back(linking_number(loop, c));
    }
    if (valid) {
      const auto ones = std::count_if(o.profile.begin(), o.profile.end(), [](long v) { return v == 1 || v == -1; });
      const auto zeros = std::count(o.profile.begin(), o.profile.end(), 0L);
      if (ones != 1 || zeros + 1 != static_cast<long>(o.profile.size())) {
        valid = false;
        o.detail = "linking profile is not a single ±1";
      }
    }
    if (!valid) {
      out.push_back(std::move(o));
      continue;
    }
    o.status = DualityOutcome::Status::Misses;
    const auto& pts = loop.points();
    for (std::size_t i = 0; i < pts.size() && o.status == DualityOutcome::Status::Misses; ++i)
      for (std::size_t c = 0; c < cells.size(); ++c)
        if (hulls_intersect({pts[i], pts[(i + 1) % pts.size()]}, cells[c])) {
          o.status = DualityOutcome::Status::Meets;
          o.detail = "segment " + std::to_string(i) + " meets " + to_string(x.facets()[c]);
          break;
        }
    if (o.status == DualityOutcome::Status::Misses) o.detail = "loop " + std::to_string(g) + " avoids X";
    out.push_back(std::move(o));
  }
  return out;
}

}  // namespace cechspan
