#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cechspan/linking.hpp"
#include "cechspan/parallel.hpp"
#include "cechspan/plateau.hpp"
#include "cechspan/scx.hpp"
#include "cechspan/spanning.hpp"
#include "cechspan/verify.hpp"

#ifndef CECHSPAN_VERSION
#define CECHSPAN_VERSION "dev"
#endif

using namespace cechspan;

namespace {

enum Exit { kOk = 0, kInternal = 1, kParse = 2, kManifold = 3, kInfeasible = 4, kSuiteFail = 5 };

struct Loaded {
  SimplicialComplex complex;
  std::vector<LoopPoints> loops;
  std::uint64_t fingerprint = 0;
};

std::string load_text(const std::string& path) {
  try {
    return read_file(path);
  } catch (const std::runtime_error& e) {
    throw ParseError(e.what(), 0);
  }
}

class Report {
 public:
  explicit Report(const std::vector<std::string>& args) {
    out_ << "cechspan " << CECHSPAN_VERSION << "\n";
    out_ << "command:";
    for (const auto& a : args) out_ << ' ' << a;
    out_ << "\n";
  }

  Loaded load(const std::string& role, const std::string& path) {
    const auto text = load_text(path);
    auto doc = parse_scx(text);
    Loaded l{std::move(doc.complex), std::move(doc.loops), fnv1a(text)};
    out_ << "input " << role << " " << path << " fingerprint " << hex64(l.fingerprint) << "\n";
    return l;
  }

  SimplicialComplex load_part(const std::string& role, const std::string& path, const SimplicialComplex& parent) {
    const auto text = load_text(path);
    out_ << "input " << role << " " << path << " fingerprint " << hex64(fnv1a(text)) << "\n";
    return parse_subcomplex(text, parent);
  }

  std::ostream& out() { return out_; }
  void flush() { std::cout << out_.str() << std::flush; }

 private:
  std::ostringstream out_;
};

CoefficientSpec parse_ring(const std::string& text) {
  try {
    return CoefficientSpec::parse(text);
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(e.what(), 0);
  }
}

void print_cochain(std::ostream& out, const SimplicialComplex& k, int degree, const Cochain& c) {
  bool any = false;
  const auto& cells = k.simplices(degree);
  for (std::size_t i = 0; i < c.size() && i < cells.size(); ++i) {
    if (c[i] == 0) continue;
    out << ' ' << to_string(cells[i]) << '=' << c[i].str();
    any = true;
  }
  if (!any) out << " 0";
}

void print_presentation(std::ostream& out, const SimplicialComplex& k, const CohomologyPresentation& p,
                        const std::string& indent = "") {
  out << indent << "group: " << p.describe() << "\n";
  out << indent << "free-rank: " << p.free_rank << "\n";
  out << indent << "torsion:";
  if (p.torsion.empty()) out << " none";
  for (const auto& t : p.torsion) out << ' ' << t.str();
  out << "\n";
  for (std::size_t i = 0; i < p.generators.size(); ++i) {
    out << indent << "generator " << i << ":";
    print_cochain(out, k, p.degree, p.generators[i]);
    out << "\n";
  }
}

// `class c1 ... cr` lines, coordinates against the reduced H^{m-1}(A) presentation.
ClassSet parse_class_file(const std::string& text, const CohomologyPresentation& p) {
  std::vector<CohomologyClass> elems;
  std::istringstream in(text);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream words(line);
    std::string kw;
    if (!(words >> kw)) continue;
    if (kw != "class") throw ParseError("expected 'class <coordinates>'", number);
    std::vector<Integer> coords;
    for (std::string t; words >> t;) {
      try {
        coords.emplace_back(t);
      } catch (const std::exception&) {
        throw ParseError("bad coordinate '" + t + "'", number);
      }
    }
    if (coords.size() != p.rank())
      throw ParseError("class has " + std::to_string(coords.size()) + " coordinates, H^" + std::to_string(p.degree) +
                           "(A) = " + p.describe() + " needs " + std::to_string(p.rank()),
                       number);
    auto c = make_class(p, coords);
    if (c.is_zero()) throw ParseError("class sets may not contain the zero class", number);
    elems.push_back(std::move(c));
  }
  return ClassSet::make(p, std::move(elems));
}

ClassSet resolve_L(Report& r, const std::string& source, const SimplicialComplex& a, int m, const CoefficientSpec& ring) {
  if (source == "canonical") {
    r.out() << "L: canonical\n";
    return canonical_L(a, m, ring);
  }
  const auto text = load_text(source);
  r.out() << "input L " << source << " fingerprint " << hex64(fnv1a(text)) << "\n";
  return parse_class_file(text, cohomology(a, m - 1, ring, true));
}

void print_classes(std::ostream& out, const std::string& label, const ClassSet& L) {
  out << label << ": " << L.size() << "\n";
  for (const auto& c : L.elements) out << "  class " << to_string(c) << "\n";
}

std::pair<std::uint64_t, std::uint64_t> parse_seed_range(const std::string& text) {
  const auto dots = text.find("..");
  auto number = [&](const std::string& s) -> std::uint64_t {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("seed range must look like a..b, got '" + text + "'", 0);
    return std::stoull(s);
  };
  if (dots == std::string::npos) {
    const auto v = number(text);
    return {v, v};
  }
  const auto a = number(text.substr(0, dots)), b = number(text.substr(dots + 2));
  if (b < a) throw ParseError("empty seed range '" + text + "'", 0);
  return {a, b};
}

std::vector<std::string> parse_ids(const std::vector<std::string>& raw) {
  std::vector<std::string> ids;
  for (const auto& item : raw) {
    std::stringstream ss(item);
    for (std::string id; std::getline(ss, id, ',');) {
      if (id.empty()) continue;
      if (id == "all") {
        for (const auto& x : lemma_ids()) ids.push_back(x);
        continue;
      }
      if (!is_lemma_id(id)) throw ParseError("unknown lemma id '" + id + "'", 0);
      ids.push_back(id);
    }
  }
  return ids;
}

struct Options {
  std::string total, part, ring = "Z", L = "canonical", method = "bnb", weights = "volume";
  std::string seeds = "0..49", replay, x, a;
  std::vector<std::string> ids;
  int degree = 0, m = 2;
  bool reduced = false, verbose = false;
};

int cmd_cohomology(Report& r, const Options& o) {
  const auto k = r.load("complex", o.total);
  const auto ring = parse_ring(o.ring);
  r.out() << "degree: " << o.degree << " ring: " << ring.name() << (o.reduced ? " reduced" : "") << "\n";
  print_presentation(r.out(), k.complex, cohomology(k.complex, o.degree, ring, o.reduced));
  return kOk;
}

int cmd_coboundary(Report& r, const Options& o) {
  const auto x = r.load("total", o.total);
  const auto a = r.load_part("part", o.part, x.complex);
  const auto ring = parse_ring(o.ring);
  const auto rep = algebraic_coboundary(InclusionPair::make(x.complex, a), o.m, ring);
  auto& out = r.out();
  out << "m: " << o.m << " ring: " << ring.name() << "\n";
  out << "H(X): " << rep.restriction.domain.describe() << "\n";
  out << "H(A): " << rep.part_cohomology().describe() << "\n";
  out << "restriction-matrix:";
  for (std::size_t i = 0; i < rep.restriction.matrix.rows(); ++i) {
    out << "\n ";
    for (std::size_t j = 0; j < rep.restriction.matrix.cols(); ++j) out << ' ' << rep.restriction.matrix(i, j).str();
  }
  out << "\n";
  out << "image-generators: " << rep.image_generators.size() << "\n";
  for (const auto& g : rep.image_generators) out << "  class " << to_string(g) << "\n";
  if (rep.coboundary) {
    out << "coboundary: " << rep.coboundary->size() << "\n";
    for (const auto& c : *rep.coboundary) out << "  class " << to_string(c) << "\n";
  } else {
    out << "coboundary: not enumerable (H(A) is infinite or too large)\n";
  }
  return kOk;
}

int cmd_spans(Report& r, const Options& o) {
  const auto x = r.load("total", o.total);
  const auto a = r.load_part("part", o.part, x.complex);
  const auto ring = parse_ring(o.ring);
  const auto L = resolve_L(r, o.L, a, o.m, ring);
  const auto v = spans(SpanQuery{InclusionPair::make(x.complex, a), o.m, ring, L});
  auto& out = r.out();
  out << "m: " << o.m << " ring: " << ring.name() << "\n";
  print_classes(out, "L", L);
  out << "spans: " << (v.spans ? "true" : "false") << "\n";
  for (const auto& c : v.certificates) {
    out << "  element " << to_string(c.element);
    if (c.preimage) {
      out << " restricted-from";
      for (const auto& w : c.preimage->coordinates) out << ' ' << w.str();
      if (c.preimage->denominator != 1) out << " /" << c.preimage->denominator.str();
      out << "\n";
    } else {
      out << " not-in-image\n";
    }
  }
  return kOk;
}

int cmd_canonical_l(Report& r, const Options& o) {
  const auto a = r.load("boundary", o.total);
  const auto ring = parse_ring(o.ring);
  const auto L = canonical_L(a.complex, o.m, ring);
  r.out() << "m: " << o.m << " ring: " << ring.name() << "\n";
  print_presentation(r.out(), a.complex, cohomology(a.complex, o.m - 1, ring, true));
  print_classes(r.out(), "L", L);
  return kOk;
}

int cmd_minimize(Report& r, const Options& o) {
  const auto u = r.load("ambient", o.total);
  const auto a = r.load_part("boundary", o.part, u.complex);
  const auto ring = parse_ring(o.ring);
  const auto method = parse_method(o.method);
  if (o.weights != "volume" && o.weights != "unit") throw ParseError("weights must be volume or unit", 0);
  const auto L = resolve_L(r, o.L, a, o.m, ring);
  const auto inst = SpanningInstance::make(u.complex, a, o.m, ring, L,
                                           o.weights == "unit" ? WeightKind::Unit : WeightKind::Volume);
  r.out() << "m: " << o.m << " ring: " << ring.name() << " weights: " << o.weights << "\n";
  const auto res = minimize(inst, method, thread_count());
  r.out() << describe(res, inst);
  return res.feasible ? kOk : kInfeasible;
}

int cmd_verify(Report& r, const Options& o) {
  SuiteSummary s;
  if (!o.replay.empty()) {
    const auto text = load_text(o.replay);
    r.out() << "input replay " << o.replay << " fingerprint " << hex64(fnv1a(text)) << "\n";
    s = run_cases(parse_replay(text), thread_count());
  } else {
    const auto ids = parse_ids(o.ids.empty() ? std::vector<std::string>{"all"} : o.ids);
    const auto [first, last] = parse_seed_range(o.seeds);
    const auto ring = parse_ring(o.ring);
    r.out() << "seeds: " << first << ".." << last << " ring: " << ring.name() << " ids: " << ids.size() << "\n";
    s = run_suite(ids, first, last, ring, thread_count());
  }
  r.out() << describe(s, o.verbose);
  return s.ok() ? kOk : kSuiteFail;
}

int cmd_linking(Report& r, const Options& o) {
  const auto doc = r.load("loops", o.total);
  std::vector<PolyLoop> loops;
  for (const auto& pts : doc.loops) loops.push_back(PolyLoop::make(pts));
  auto& out = r.out();
  out << "loops: " << loops.size() << "\n";
  for (std::size_t i = 0; i < loops.size(); ++i)
    for (std::size_t j = i + 1; j < loops.size(); ++j) {
      out << "link " << i << " " << j << ": ";
      if (loops_intersect(loops[i], loops[j])) out << "intersecting\n";
      else out << linking_number(loops[i], loops[j]) << "\n";
    }
  if (!o.x.empty()) {
    const auto x = r.load("x", o.x);
    const auto a = r.load_part("a", o.a, x.complex);
    const auto outcomes = duality_necessity_check(x.complex, a, loops);
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
      out << "loop " << i << ": " << to_string(outcomes[i].status) << " profile";
      for (long p : outcomes[i].profile) out << ' ' << p;
      if (!outcomes[i].detail.empty()) out << " (" << outcomes[i].detail << ")";
      out << "\n";
    }
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spanning sets, algebraic coboundaries and discrete Plateau minimization"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(CECHSPAN_VERSION));
  Options o;
  auto add_ring = [&](CLI::App* c) { c->add_option("--ring", o.ring, "Z, Q or Zq")->capture_default_str(); };
  auto add_m = [&](CLI::App* c) { c->add_option("--m", o.m, "Dimension m (classes live in degree m-1)")->check(CLI::PositiveNumber)->capture_default_str(); };
  auto add_pair = [&](CLI::App* c, const char* total, const char* part) {
    c->add_option(total, o.total, "Complex (.scx)")->required();
    c->add_option(part, o.part, "Subcomplex (.scx simplex/vertex lines)")->required();
  };

  auto* coh = app.add_subcommand("cohomology", "Cohomology group with generators");
  coh->add_option("complex", o.total, "Complex (.scx)")->required();
  coh->add_option("--k", o.degree, "Degree")->check(CLI::NonNegativeNumber)->capture_default_str();
  coh->add_flag("--reduced", o.reduced, "Reduced cohomology");
  add_ring(coh);

  auto* cob = app.add_subcommand("coboundary", "Restriction image and algebraic coboundary K*(X, A)");
  add_pair(cob, "total", "part");
  add_m(cob);
  add_ring(cob);

  auto* spn = app.add_subcommand("spans", "Decide whether X spans L over A");
  add_pair(spn, "total", "part");
  add_m(spn);
  add_ring(spn);
  spn->add_option("--L", o.L, "canonical or a class file")->capture_default_str();

  auto* can = app.add_subcommand("canonical-l", "Canonical class set of a closed orientable boundary");
  can->add_option("boundary", o.total, "Boundary complex (.scx)")->required();
  add_m(can);
  add_ring(can);

  auto* mini = app.add_subcommand("minimize", "Lightest spanning subcomplex of an ambient complex");
  add_pair(mini, "ambient", "boundary");
  add_m(mini);
  add_ring(mini);
  mini->add_option("--L", o.L, "canonical or a class file")->capture_default_str();
  mini->add_option("--method", o.method, "exhaustive, bnb or greedy")->capture_default_str();
  mini->add_option("--weights", o.weights, "volume or unit")->capture_default_str();

  auto* ver = app.add_subcommand("verify", "Run the lemma property suite");
  ver->add_option("--id", o.ids, "Lemma ids, comma separated, or all");
  ver->add_option("--seeds", o.seeds, "Seed range a..b")->capture_default_str();
  ver->add_option("--replay", o.replay, "Replay file of case lines");
  ver->add_flag("--verbose", o.verbose, "Print every case");
  o.ring = "Z";
  ver->add_option("--ring", o.ring, "Z, Q or Zq (default Z2)");

  auto* lnk = app.add_subcommand("linking", "Pairwise linking numbers of polygonal loops");
  lnk->add_option("loops", o.total, "File with loop lines")->required();
  lnk->add_option("--x", o.x, "Spanning complex for the duality check");
  lnk->add_option("--a", o.a, "Boundary subcomplex for the duality check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }
  if (ver->parsed() && ver->count("--ring") == 0) o.ring = "Z2";
  if (lnk->parsed() && o.x.empty() != o.a.empty()) {
    std::cerr << "error: --x and --a must be given together\n";
    return kParse;
  }

  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  Report report(args);
  int code = kInternal;
  try {
    if (coh->parsed()) code = cmd_cohomology(report, o);
    else if (cob->parsed()) code = cmd_coboundary(report, o);
    else if (spn->parsed()) code = cmd_spans(report, o);
    else if (can->parsed()) code = cmd_canonical_l(report, o);
    else if (mini->parsed()) code = cmd_minimize(report, o);
    else if (ver->parsed()) code = cmd_verify(report, o);
    else if (lnk->parsed()) code = cmd_linking(report, o);
  } catch (const ParseError& e) {
    report.flush();
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const ManifoldPreconditionError& e) {
    report.flush();
    std::cerr << "manifold precondition: " << e.what() << "\n";
    return kManifold;
  } catch (const std::exception& e) {
    report.flush();
    std::cerr << "error: " << e.what() << "\n";
    return kInternal;
  }
  report.out() << "exit: " << code << "\n";
  report.flush();
  return code;
}
