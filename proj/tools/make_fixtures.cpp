// Writes the shipped example inputs: data/fixtures (CLI inputs) and data/corpus.
#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "cechspan/fixtures.hpp"
#include "cechspan/scx.hpp"
#include "cechspan/verify.hpp"

using namespace cechspan;
namespace fs = std::filesystem;
namespace fx = cechspan::fixtures;

namespace {

void write(const fs::path& path, const std::string& text) {
  fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

std::string class_file(const ClassSet& L) {
  std::string s;
  for (const auto& c : L.elements) {
    s += "class";
    for (const auto& x : c.coordinates) s += " " + x.str();
    s += "\n";
  }
  return s;
}

std::vector<LoopPoints> points_of(const std::vector<PolyLoop>& loops) {
  std::vector<LoopPoints> out;
  for (const auto& l : loops) out.push_back(l.points());
  return out;
}

void three_rings(const fs::path& dir) {
  const auto r = fx::three_rings();
  write(dir / "rings-a.scx", write_subcomplex(r.a));
  write(dir / "rings-x1.scx", write_scx(r.x1));
  write(dir / "rings-x2.scx", write_scx(r.x2));
  write(dir / "rings-x3.scx", write_scx(r.x3));
  const auto all = unite(std::vector<SimplicialComplex>{r.x1, r.x2, r.x3, r.disk_middle});
  write(dir / "rings-ambient.scx", write_scx(all));
  write(dir / "rings-probes.scx", write_scx(SimplicialComplex(), points_of(r.probe_loops)));
  write(dir / "figure-eight.scx", "vertex 0\nvertex 1\nvertex 2\nvertex 3\nvertex 4\n"
                                  "simplex 0 1\nsimplex 1 2\nsimplex 0 2\nsimplex 0 3\nsimplex 3 4\nsimplex 0 4\n");
}

void pinched_torus(const fs::path& dir) {
  const auto t = fx::pinched_torus();
  write(dir / "torus-ambient.scx", write_scx(t.ambient));
  write(dir / "torus-boundary.scx", write_subcomplex(t.torus));
  write(dir / "torus-L.txt", "# evaluates to 1 on each cross-section circle, 0 on the outer longitude\n" + class_file(t.L));
  write(dir / "torus-narrowest-disk.scx",
        write_subcomplex(SimplicialComplex::from_simplices(t.station_disks[t.narrowest_station])));
}

void shapes(const fs::path& dir) {
  const auto m = fx::moebius();
  write(dir / "moebius.scx", write_scx(m.band));
  write(dir / "moebius-boundary.scx", write_subcomplex(m.boundary));
  for (int n : {2, 3}) {
    const auto b = fx::ball(n);
    const auto tag = "ball" + std::to_string(n);
    write(dir / (tag + ".scx"), write_scx(b.ball));
    write(dir / (tag + "-sphere.scx"), write_subcomplex(b.sphere));
    write(dir / (tag + "-shell.scx"), write_subcomplex(b.shell));
  }
  const auto tri = SimplicialComplex::from_simplices({{0, 1}, {1, 2}, {0, 2}});
  write(dir / "hollow-triangle.scx", write_scx(tri));
  write(dir / "point.scx", "vertex 0\n");
  write(dir / "cone.scx", write_scx(cone(tri, 3)));
  write(dir / "malformed.scx", "dim 2\nvertex 0 0 0\nsimplex 0 x\n");

  // Boundary square with a disk that does not touch it: no spanning set exists.
  const Rational one(1);
  const auto square = fx::circle(0, 4, one, Rational(0));
  const auto far = fx::disk(10, 4, one, Rational(5), 20);
  write(dir / "infeasible-ambient.scx", write_scx(unite(square, far)));
  write(dir / "infeasible-boundary.scx", write_subcomplex(square));
}

void loops(const fs::path& dir) {
  for (const auto& p : fx::reference_loop_pairs())
    write(dir / ("loops-" + p.name + ".scx"), write_scx(SimplicialComplex(), {p.a.points(), p.b.points()}));
}

void replays(const fs::path& dir) {
  write(dir / "replay-ok.txt", "# reproduces two passing cases\ncase L1A 0 Z2\ncase L8A 2 Z3\n");
  write(dir / "replay-fault.txt", "# exercises the failure path of the suite\ncase L1A 0 Z2 inject-fault\n");
}

void corpus(const fs::path& dir) {
  for (const auto& [name, k] : fx::corpus()) write(dir / (name + ".scx"), write_scx(k));
  for (std::uint64_t seed = 0; seed < 4; ++seed)
    write(dir / ("random-" + std::to_string(seed) + ".scx"), write_scx(random_complex(seed, 6, 2, 0.5)));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Write example inputs"};
  std::string root = "data";
  app.add_option("root", root, "Output root (fixtures/ and corpus/ are created below it)")->capture_default_str();
  CLI11_PARSE(app, argc, argv);
  try {
    const fs::path base(root);
    three_rings(base / "fixtures");
    pinched_torus(base / "fixtures");
    shapes(base / "fixtures");
    loops(base / "fixtures");
    replays(base / "fixtures");
    corpus(base / "corpus");
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
