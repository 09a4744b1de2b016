#include "cechspan/scx.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace cechspan {

namespace {

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i == line.size() || line[i] == '#') break;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r' && line[j] != '#') ++j;
    out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

VertexId parse_id(std::string_view t, int line) {
  VertexId v = 0;
  auto [end, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || end != t.data() + t.size() || v < 0)
    throw ParseError("invalid vertex id '" + std::string(t) + "'", line);
  return v;
}

Rational parse_coordinate(std::string_view t, int line) {
  try {
    return parse_rational(t);
  } catch (const std::exception&) {
    throw ParseError("invalid rational '" + std::string(t) + "'", line);
  }
}

template <class F>
void for_each_line(std::string_view text, F&& f) {
  int number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    auto toks = tokens(text.substr(start, end - start));
    if (!toks.empty()) f(toks, number);
    if (end == text.size()) break;
    start = end + 1;
  }
}

Simplex simplex_from(const std::vector<std::string_view>& toks, int line) {
  if (toks.size() < 2) throw ParseError("simplex needs at least one vertex", line);
  std::vector<VertexId> ids;
  for (std::size_t i = 1; i < toks.size(); ++i) ids.push_back(parse_id(toks[i], line));
  Simplex s = make_simplex(ids);
  if (s.size() != ids.size()) throw ParseError("repeated vertex in simplex", line);
  return s;
}

}  // namespace

ScxDocument parse_scx(std::string_view text) {
  std::optional<std::size_t> ambient;
  std::map<VertexId, Point> coords;
  std::set<VertexId> declared;
  std::size_t with_coords = 0;
  int first_bare = 0, first_coord = 0;
  std::vector<Simplex> gens;
  std::vector<LoopPoints> loops;

  for_each_line(text, [&](const std::vector<std::string_view>& toks, int line) {
    const auto& kw = toks[0];
    if (kw == "dim") {
      if (ambient) throw ParseError("duplicate dim header", line);
      if (!declared.empty()) throw ParseError("dim must precede vertex declarations", line);
      if (toks.size() != 2) throw ParseError("dim takes one argument", line);
      ambient = static_cast<std::size_t>(parse_id(toks[1], line));
    } else if (kw == "vertex") {
      if (toks.size() < 2) throw ParseError("vertex needs an id", line);
      VertexId v = parse_id(toks[1], line);
      if (!declared.insert(v).second) throw ParseError("duplicate vertex id " + std::to_string(v), line);
      const std::size_t arity = toks.size() - 2;
      if (arity == 0) {
        if (!first_bare) first_bare = line;
      } else {
        const std::size_t n = ambient.value_or(0);
        if (arity != n)
          throw ParseError("vertex " + std::to_string(v) + " has " + std::to_string(arity) +
                               " coordinates but dim is " + std::to_string(n),
                           line);
        Point p;
        for (std::size_t i = 2; i < toks.size(); ++i) p.push_back(parse_coordinate(toks[i], line));
        coords.emplace(v, std::move(p));
        ++with_coords;
        if (!first_coord) first_coord = line;
      }
      if (with_coords && first_bare)
        throw ParseError("inconsistent coordinate arity: some vertices lack coordinates",
                         std::max(first_bare, first_coord));
    } else if (kw == "simplex") {
      Simplex s = simplex_from(toks, line);
      for (VertexId v : s)
        if (!declared.count(v)) throw ParseError("unknown vertex " + std::to_string(v), line);
      gens.push_back(std::move(s));
    } else if (kw == "loop") {
      const std::size_t n = toks.size() - 1;
      if (n % 3 != 0 || n < 9) throw ParseError("loop needs at least three points given as x y z triples", line);
      LoopPoints loop;
      for (std::size_t i = 1; i < toks.size(); i += 3)
        loop.push_back({parse_coordinate(toks[i], line), parse_coordinate(toks[i + 1], line),
                        parse_coordinate(toks[i + 2], line)});
      loops.push_back(std::move(loop));
    } else {
      throw ParseError("unknown keyword '" + std::string(kw) + "'", line);
    }
  });

  for (VertexId v : declared) gens.push_back({v});
  ScxDocument doc;
  doc.complex = SimplicialComplex::from_simplices(gens, ambient.value_or(0), std::move(coords));
  doc.loops = std::move(loops);
  return doc;
}

SimplicialComplex parse_complex(std::string_view text) { return parse_scx(text).complex; }

SimplicialComplex parse_subcomplex(std::string_view text, const SimplicialComplex& parent) {
  std::vector<Simplex> gens;
  for_each_line(text, [&](const std::vector<std::string_view>& toks, int line) {
    const auto& kw = toks[0];
    if (kw == "dim") return;
    Simplex s;
    if (kw == "simplex") {
      s = simplex_from(toks, line);
    } else if (kw == "vertex") {
      if (toks.size() < 2) throw ParseError("vertex needs an id", line);
      s = {parse_id(toks[1], line)};
      if (toks.size() > 2 && parent.has_coordinates()) {
        Point p;
        for (std::size_t i = 2; i < toks.size(); ++i) p.push_back(parse_coordinate(toks[i], line));
        if (parent.contains(s) && p != parent.coordinates(s[0]))
          throw ParseError("vertex " + std::to_string(s[0]) + " coordinates differ from the parent", line);
      }
    } else {
      throw ParseError("unexpected '" + std::string(kw) + "' in subcomplex document", line);
    }
    if (!parent.contains(s)) throw ParseError("simplex " + to_string(s) + " is not in the parent complex", line);
    gens.push_back(std::move(s));
  });
  return subcomplex(parent, gens);
}

std::string write_scx(const SimplicialComplex& k, const std::vector<LoopPoints>& loops) {
  std::ostringstream out;
  if (k.ambient_dimension() > 0 || k.has_coordinates()) out << "dim " << k.ambient_dimension() << "\n";
  for (VertexId v : k.vertices()) {
    out << "vertex " << v;
    if (k.has_coordinates())
      for (const auto& c : k.coordinates(v)) out << ' ' << to_string(c);
    out << "\n";
  }
  for (const auto& f : k.facets()) {
    if (f.size() < 2) continue;
    out << "simplex";
    for (VertexId v : f) out << ' ' << v;
    out << "\n";
  }
  for (const auto& loop : loops) {
    out << "loop";
    for (const auto& p : loop)
      for (const auto& c : p) out << ' ' << to_string(c);
    out << "\n";
  }
  return out.str();
}

std::string write_subcomplex(const SimplicialComplex& k) {
  std::ostringstream out;
  for (const auto& f : k.facets()) {
    out << "simplex";
    for (VertexId v : f) out << ' ' << v;
    out << "\n";
  }
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace cechspan
