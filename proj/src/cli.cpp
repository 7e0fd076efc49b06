#include "operahedra/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "operahedra/operad.hpp"
#include "operahedra/reference_tables.hpp"

namespace operahedra::cli {

using json = nlohmann::ordered_json;

namespace {

struct Config {
  std::string tree_json, tree_file;
  std::string format = "json";
  std::string weight, vector, nesting, labeling, method = "cone", output;
  bool count = false, max_only = false, allow_any_chamber = false;
  int max_dim = 5;
  int jobs = 0;
};

PlanarTree load_tree(const Config& c) {
  if (!c.tree_json.empty() && !c.tree_file.empty()) throw std::invalid_argument("give --tree or --file, not both");
  if (!c.tree_file.empty()) {
    std::ifstream in(c.tree_file);
    if (!in) throw std::runtime_error("cannot read " + c.tree_file);
    std::stringstream ss;
    ss << in.rdbuf();
    return PlanarTree::parse(ss.str());
  }
  if (c.tree_json.empty()) throw std::invalid_argument("a tree is required (--tree or --file)");
  return PlanarTree::parse(c.tree_json);
}

int jobs_of(const Config& c) {
  if (c.jobs > 0) return c.jobs;
  if (const char* e = std::getenv("OPERAHEDRA_JOBS")) {
    int j = std::atoi(e);
    if (j > 0) return j;
  }
  return 1;
}

int polytope_dim(const PlanarTree& t) { return std::max(t.edge_count() - 1, 0); }

void check_cap(const Config& c, const PlanarTree& t) {
  if (polytope_dim(t) > c.max_dim)
    throw DimensionCapExceeded("polytope dimension " + std::to_string(polytope_dim(t)) + " exceeds --max-dim " +
                               std::to_string(c.max_dim));
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::stringstream ss(s);
  while (std::getline(ss, cur, sep)) out.push_back(cur);
  return out;
}

RatVector parse_vector(const std::string& s) {
  RatVector v;
  for (auto& x : split(s, ',')) v.push_back(parse_rational(x));
  return v;
}

std::vector<int> parse_ints(const std::string& s) {
  std::vector<int> v;
  for (auto& x : split(s, ',')) {
    std::size_t used = 0;
    int k = std::stoi(x, &used);
    if (used != x.size()) throw std::invalid_argument("not an integer: " + x);
    v.push_back(k);
  }
  return v;
}

RatVector orientation(const Config& c, const PlanarTree& t) {
  const int m = t.edge_count();
  if (c.vector.empty()) return principal_vector(m);
  RatVector v = parse_vector(c.vector);
  if (static_cast<int>(v.size()) != m)
    throw std::invalid_argument("--vector needs " + std::to_string(m) + " coordinates");
  chamber_signature(v, m);  // throws on a wall
  if (!c.allow_any_chamber && !is_principal(v, m))
    throw std::invalid_argument("--vector is not principal; pass --allow-any-chamber to use another chamber");
  return v;
}

json edges_json(EdgeSet s) { return edges_of(s); }

json nesting_to_json(const Nesting& N) {
  json a = json::array();
  for (EdgeSet s : N) a.push_back(edges_json(s));
  return a;
}

json point_json(const RatVector& x) {
  json a = json::array();
  for (auto& q : x) a.push_back(to_string(q));
  return a;
}

json tree_to_json(const PlanarTree& t) { return json::parse(t.to_json()); }

json operadic_json(const OperadicTree& x) {
  return json{{"tree", tree_to_json(x.tree)}, {"nesting", nesting_to_json(x.nesting)}, {"labeling", x.labeling}};
}

std::string csv_quote(const std::string& s) {
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + "\"";
}

std::string row(const RatVector& x) {
  std::string s;
  for (std::size_t i = 0; i < x.size(); ++i) s += (i ? "," : "") + to_string(x[i]);
  return s;
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

void require_format(const Config& c, std::initializer_list<const char*> allowed) {
  for (auto* f : allowed)
    if (c.format == f) return;
  throw std::invalid_argument("format " + c.format + " is not available for this command");
}

void write_off_files(const Config& c, const OffMesh& mesh, const json& sidecar, std::ostream& out) {
  if (c.output.empty()) throw std::invalid_argument("--format off needs --output PATH (PATH.json gets the exact sidecar)");
  std::ofstream off(c.output);
  if (!off) throw std::runtime_error("cannot write " + c.output);
  write_off(off, mesh);
  std::ofstream side(c.output + ".json");
  if (!side) throw std::runtime_error("cannot write " + c.output + ".json");
  emit(side, sidecar);
  out << "wrote " << c.output << " and " << c.output << ".json\n";
}

// --- commands ---

int cmd_nestings(const Config& c, std::ostream& out) {
  require_format(c, {"json", "csv"});
  auto t = load_tree(c);
  auto all = enumerate_nestings(t, c.max_only);
  if (c.count) {
    out << all.size() << "\n";
    return Ok;
  }
  if (c.format == "csv") {
    for (auto& N : all) out << face_dim(t, N) << "," << csv_quote(nesting_json(N)) << "\n";
    return Ok;
  }
  json list = json::array();
  for (auto& N : all) {
    json e{{"nesting", nesting_to_json(N)}, {"dim", face_dim(t, N)}};
    if (t.is_two_leveled() && t.n() >= 2) e["partition"] = partition_string(nesting_partition(t, N));
    list.push_back(e);
  }
  emit(out, json{{"tree", tree_to_json(t)}, {"count", all.size()}, {"nestings", list}});
  return Ok;
}

int cmd_realize(const Config& c, std::ostream& out) {
  require_format(c, {"json", "csv", "off"});
  auto t = load_tree(c);
  Weight w = c.weight.empty() ? standard_weight(t) : parse_ints(c.weight);
  auto P = loday_polytope(t, w);
  if (c.format == "csv") {
    for (auto& x : P.points) out << row(x) << "\n";
    return Ok;
  }
  if (c.format == "off") {
    if (polytope_dim(t) != 3 || t.edge_count() != 4) throw std::invalid_argument("off output needs a 3-dimensional polytope");
    OffMesh mesh;
    add_cell(mesh, P.points);
    json pts = json::array();
    for (auto& x : mesh.points) pts.push_back(point_json(x));
    write_off_files(c, mesh, json{{"tree", tree_to_json(t)}, {"weight", w}, {"vertices", pts}, {"faces", mesh.faces}},
                    out);
    return Ok;
  }
  json verts = json::array();
  for (std::size_t k = 0; k < P.points.size(); ++k)
    verts.push_back(json{{"nesting", nesting_to_json(P.maximal[k])}, {"point", point_json(P.points[k])}});
  json eqs = json::array(), ineqs = json::array();
  for (auto& e : P.hrep.equalities) eqs.push_back(json{{"a", point_json(e.a)}, {"b", to_string(e.b)}});
  for (std::size_t k = 0; k < P.nests.size(); ++k)
    ineqs.push_back(json{{"nest", edges_json(P.nests[k])},
                         {"a", point_json(P.hrep.inequalities[k].a)},
                         {"b", to_string(P.hrep.inequalities[k].b)}});
  emit(out, json{{"tree", tree_to_json(t)},
                 {"weight", w},
                 {"dimension", polytope_dim(t)},
                 {"vertices", verts},
                 {"equalities", eqs},
                 {"inequalities", ineqs}});
  return Ok;
}

int cmd_diagonal(const Config& c, std::ostream& out) {
  require_format(c, {"json", "csv", "off"});
  auto t = load_tree(c);
  check_cap(c, t);
  RatVector v = orientation(c, t);
  auto pairs = diagonal_image(t, v, jobs_of(c));
  if (c.count) {
    out << pairs.size() << "\n";
    return Ok;
  }
  if (c.format == "csv") {
    for (auto& p : pairs)
      out << csv_quote(nesting_json(p.left)) << "," << csv_quote(nesting_json(p.right)) << "," << p.dim_left << ","
          << p.dim_right << "\n";
    return Ok;
  }
  if (c.format == "off") {
    if (polytope_dim(t) != 3 || t.edge_count() != 4) throw std::invalid_argument("off output needs a 3-dimensional polytope");
    auto P = loday_polytope(t);
    OffMesh mesh;
    json cells = json::array();
    for (auto& p : pairs) {
      std::vector<RatVector> V;
      for (auto a : face_vertices(P, p.left))
        for (auto b : face_vertices(P, p.right)) V.push_back(scale(add(P.points[a], P.points[b]), Rational(1, 2)));
      add_cell(mesh, V);
      cells.push_back(json{{"left", nesting_to_json(p.left)},
                           {"right", nesting_to_json(p.right)},
                           {"faces", mesh.cells.back()}});
    }
    json pts = json::array();
    for (auto& x : mesh.points) pts.push_back(point_json(x));
    write_off_files(c, mesh,
                    json{{"tree", tree_to_json(t)}, {"vector", point_json(v)}, {"vertices", pts}, {"faces", mesh.faces},
                         {"cells", cells}},
                    out);
    return Ok;
  }
  json list = json::array();
  bool parts = t.is_two_leveled() && t.n() >= 2;
  for (auto& p : pairs) {
    json e{{"left", nesting_to_json(p.left)}, {"right", nesting_to_json(p.right)}, {"dims", {p.dim_left, p.dim_right}}};
    if (parts) {
      e["left_partition"] = partition_string(nesting_partition(t, p.left));
      e["right_partition"] = partition_string(nesting_partition(t, p.right));
    }
    list.push_back(e);
  }
  emit(out, json{{"tree", tree_to_json(t)}, {"vector", point_json(v)}, {"count", pairs.size()}, {"pairs", list}});
  return Ok;
}

int cmd_oracle_check(const Config& c, std::ostream& out, std::ostream& err) {
  auto t = load_tree(c);
  check_cap(c, t);
  RatVector v = orientation(c, t);
  auto pairs = diagonal_image(t, v, jobs_of(c));
  std::set<std::pair<Nesting, Nesting>> mine, other;
  for (auto& p : pairs) mine.insert({p.left, p.right});
  std::size_t total = 0, agree = 0;
  if (c.method == "cone") {
    auto all = enumerate_nestings(t, false);
    for (auto& F : all)
      for (auto& G : all)
        if (static_cast<int>(F.size() + G.size()) == std::max(t.n(), 1) || (t.n() == 1))
          if (pair_in_image_cone(t, F, G, v)) other.insert({F, G});
  } else if (c.method == "pointwise") {
    auto P = loday_polytope(t);
    for (auto& p : pairs) {
      RatVector z = scale(add(barycenter(P, p.left), barycenter(P, p.right)), Rational(1, 2));
      auto r = bot_top_point(P, z, v);
      other.insert({r.bm_carrier, r.tp_carrier});
    }
  } else if (c.method == "projection") {
    if (!c.vector.empty()) throw std::invalid_argument("the projection method uses the principal chamber only");
    for (auto& p : diagonal_via_projection(t, jobs_of(c))) other.insert({p.left, p.right});
  } else {
    throw std::invalid_argument("unknown method " + c.method + " (cone, pointwise, projection)");
  }
  std::set<std::pair<Nesting, Nesting>> both = mine;
  both.insert(other.begin(), other.end());
  total = both.size();
  for (auto& p : both) {
    if (mine.count(p) && other.count(p))
      ++agree;
    else
      err << (mine.count(p) ? "formula only: " : "oracle only: ") << nesting_json(p.first) << " x "
          << nesting_json(p.second) << "\n";
  }
  out << agree << "/" << total << " agree\n";
  return agree == total ? Ok : Failure;
}

int cmd_arrangement(const Config& c, std::ostream& out) {
  require_format(c, {"json", "csv"});
  auto t = load_tree(c);
  check_cap(c, t);
  const int m = t.edge_count();
  auto dirs = arrangement_bruteforce(t, jobs_of(c));
  if (c.count) {
    out << dirs.size() << "\n";
    return Ok;
  }
  std::map<std::vector<int>, std::string> names;
  for (auto& p : generate_D(m)) {
    std::vector<int> d;
    for (auto& q : normal_of(p, m)) d.push_back(static_cast<int>(q.convert_to<long>()));
    names[d] = dpair_string(p);
    for (auto& x : d) x = -x;
    names[d] = dpair_string(p);
  }
  if (c.format == "csv") {
    for (auto& d : dirs) {
      for (std::size_t i = 0; i < d.size(); ++i) out << (i ? "," : "") << d[i];
      out << "\n";
    }
    return Ok;
  }
  json list = json::array();
  for (auto& d : dirs) {
    auto it = names.find(d);
    list.push_back(json{{"normal", d}, {"pair", it == names.end() ? json() : json(it->second)}});
  }
  emit(out, json{{"tree", tree_to_json(t)}, {"count", dirs.size()}, {"directions", list}});
  return Ok;
}

OperadicTree cell_of(const Config& c, const PlanarTree& t) {
  OperadicTree x = operadic_tree(t, c.nesting.empty() ? std::nullopt : std::optional<Nesting>(parse_nesting(c.nesting)));
  if (!c.labeling.empty()) {
    x.labeling = parse_ints(c.labeling);
    validate(x);
  }
  return x;
}

int cmd_differential(const Config& c, std::ostream& out) {
  require_format(c, {"json"});
  auto t = load_tree(c);
  auto d = differential(cell_of(c, t));
  json list = json::array();
  for (auto& [x, k] : d) list.push_back(json{{"term", operadic_json(x)}, {"coeff", k}});
  emit(out, list);
  return Ok;
}

int cmd_tensor(const Config& c, std::ostream& out) {
  require_format(c, {"json"});
  auto t = load_tree(c);
  check_cap(c, t);
  auto d = tensor_diagonal(cell_of(c, t));
  json list = json::array();
  for (auto& [x, k] : d)
    list.push_back(json{{"term", {{"left", operadic_json(x.first)}, {"right", operadic_json(x.second)}}}, {"coeff", k}});
  emit(out, list);
  return Ok;
}

struct Row {
  std::string check, expected, computed;
  bool ok;
};

std::set<std::pair<Nesting, Nesting>> listed(const PlanarTree& t, const std::vector<tables::Entry>& rows, bool blue) {
  std::set<std::pair<Nesting, Nesting>> s;
  for (auto& r : rows)
    if (!blue || r.blue)
      s.insert({partition_nesting(t, parse_partition(r.left)), partition_nesting(t, parse_partition(r.right))});
  return s;
}

int cmd_reproduce(const Config& c, std::ostream& out) {
  const int jobs = jobs_of(c);
  std::vector<Row> rows;
  for (int d = 0; d <= std::min(c.max_dim, 6); ++d) {
    auto n = diagonal_image(PlanarTree::two_leveled(d + 2), jobs).size();
    long long e = tables::permutahedron_counts[d];
    rows.push_back({"permutahedron dim " + std::to_string(d) + " pairs", std::to_string(e), std::to_string(n),
                    static_cast<long long>(n) == e});
  }
  auto as_set = [](const std::vector<DiagonalPair>& ps) {
    std::set<std::pair<Nesting, Nesting>> s;
    for (auto& p : ps) s.insert({p.left, p.right});
    return s;
  };
  const std::vector<std::pair<int, const std::vector<tables::Entry>*>> lists{
      {1, &tables::dim1}, {2, &tables::dim2}, {3, &tables::dim3}};
  for (auto& [d, rowsd] : lists) {
    auto t = PlanarTree::two_leveled(d + 2);
    auto got = as_set(diagonal_image(t, jobs));
    auto want = listed(t, *rowsd, false);
    std::size_t common = 0;
    for (auto& p : got) common += want.count(p);
    rows.push_back({"dim " + std::to_string(d) + " pair list", std::to_string(want.size()) + " listed pairs",
                    std::to_string(common) + " shared, " + std::to_string(got.size()) + " computed",
                    got == want});
  }
  {
    auto t = PlanarTree::two_leveled(5);
    auto l = PlanarTree::linear(5);
    std::set<std::pair<Nesting, Nesting>> proj;
    for (auto& p : diagonal_image(t, jobs))
      if (coarsen(l, p.left).size() == p.left.size() && coarsen(l, p.right).size() == p.right.size())
        proj.insert({p.left, p.right});
    auto want = listed(t, tables::dim3, true);
    rows.push_back({"dim 3 associahedron-preserved pairs", std::to_string(want.size()), std::to_string(proj.size()),
                    proj == want});
  }
  {
    auto t = PlanarTree::two_leveled(5);
    TpBmFilter f(t, principal_vector(4));
    ImageTest img(t);
    std::size_t extra = 0;
    auto all = enumerate_nestings(t, false);
    for (auto& F : all)
      for (auto& G : all)
        if (F.size() + G.size() == 5 && f(F, G) && !img(F, G)) ++extra;
    rows.push_back({"dim 3 tp<=bm pairs outside the image", std::to_string(tables::dim3_exceptions.size()),
                    std::to_string(extra), extra == tables::dim3_exceptions.size()});
  }
  for (int n = 2; n <= 6; ++n) {
    auto t = PlanarTree::linear(n);
    TpBmFilter f(t, principal_vector(n - 1));
    auto img = diagonal_image(t, jobs);
    std::set<std::pair<Nesting, Nesting>> tp;
    auto all = enumerate_nestings(t, false);
    for (auto& F : all)
      for (auto& G : all)
        if (static_cast<int>(F.size() + G.size()) == n && f(F, G)) tp.insert({F, G});
    rows.push_back({"linear " + std::to_string(n) + "-vertex tp<=bm = image", std::to_string(tp.size()),
                    std::to_string(img.size()), tp == as_set(img)});
  }
  std::size_t w1 = 5, w2 = 8, w3 = 8;
  for (auto& r : rows) {
    w1 = std::max(w1, r.check.size());
    w2 = std::max(w2, r.expected.size());
    w3 = std::max(w3, r.computed.size());
  }
  auto pad = [](const std::string& s, std::size_t w) { return s + std::string(w - s.size(), ' '); };
  out << pad("check", w1) << "  " << pad("expected", w2) << "  " << pad("computed", w3) << "  status\n";
  bool all_ok = true;
  for (auto& r : rows) {
    out << pad(r.check, w1) << "  " << pad(r.expected, w2) << "  " << pad(r.computed, w3) << "  "
        << (r.ok ? "ok" : "MISMATCH") << "\n";
    all_ok = all_ok && r.ok;
  }
  return all_ok ? Ok : Failure;
}

}  // namespace

// --- OFF export ---

namespace {

struct V3 {
  double x, y, z;
};
V3 operator-(V3 a, V3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
double dot3(V3 a, V3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
V3 cross(V3 a, V3 b) { return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x}; }

V3 chart(const RatVector& p) {
  if (p.size() != 4) throw std::invalid_argument("off output needs points in R^4 on a hyperplane sum x = c");
  return {to_double(p[1]), to_double(p[2]), to_double(p[3])};
}

}  // namespace

void add_cell(OffMesh& mesh, const std::vector<RatVector>& V) {
  std::vector<RatVector> pts = V;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  HRep h = facets_from_vertices(pts);
  if (pts.empty() || h.dim - h.equalities.size() != 3) throw std::invalid_argument("off output needs a 3-dimensional cell");
  std::vector<std::size_t> ids;
  for (auto& p : pts) {
    auto it = std::find(mesh.points.begin(), mesh.points.end(), p);
    if (it == mesh.points.end()) {
      mesh.points.push_back(p);
      ids.push_back(mesh.points.size() - 1);
    } else {
      ids.push_back(static_cast<std::size_t>(it - mesh.points.begin()));
    }
  }
  V3 center{0, 0, 0};
  for (auto& p : pts) {
    V3 q = chart(p);
    center = {center.x + q.x / pts.size(), center.y + q.y / pts.size(), center.z + q.z / pts.size()};
  }
  std::vector<std::size_t> cell;
  for (auto& f : h.inequalities) {
    std::vector<std::size_t> on;
    for (std::size_t k = 0; k < pts.size(); ++k)
      if (dot(f.a, pts[k]) == f.b) on.push_back(k);
    V3 fc{0, 0, 0};
    for (auto k : on) {
      V3 q = chart(pts[k]);
      fc = {fc.x + q.x / on.size(), fc.y + q.y / on.size(), fc.z + q.z / on.size()};
    }
    V3 u = chart(pts[on[0]]) - fc;
    V3 nrm{0, 0, 0};
    for (std::size_t k = 1; k < on.size() && dot3(nrm, nrm) < 1e-18; ++k) nrm = cross(u, chart(pts[on[k]]) - fc);
    if (dot3(nrm, fc - center) < 0) nrm = {-nrm.x, -nrm.y, -nrm.z};
    V3 w = cross(nrm, u);
    std::vector<std::pair<double, std::size_t>> ang;
    for (auto k : on) {
      V3 d = chart(pts[k]) - fc;
      ang.push_back({std::atan2(dot3(d, w), dot3(d, u)), ids[k]});
    }
    std::sort(ang.begin(), ang.end());
    std::vector<std::size_t> face;
    for (auto& [a, id] : ang) face.push_back(id);
    mesh.faces.push_back(face);
    cell.push_back(mesh.faces.size() - 1);
  }
  mesh.cells.push_back(cell);
}

void write_off(std::ostream& os, const OffMesh& mesh) {
  os << "OFF\n" << mesh.points.size() << " " << mesh.faces.size() << " 0\n";
  char buf[64];
  for (auto& p : mesh.points) {
    V3 q = chart(p);
    std::snprintf(buf, sizeof buf, "%.12g %.12g %.12g", q.x, q.y, q.z);
    os << buf << "\n";
  }
  for (auto& f : mesh.faces) {
    os << f.size();
    for (auto id : f) os << " " << id;
    os << "\n";
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Operahedra: Loday realizations, cellular diagonals and the dg operad layer"};
  app.require_subcommand(1);
  auto tree_opts = [&](CLI::App* s) {
    s->add_option("--tree", c.tree_json, "tree as nested JSON arrays, 0 for a leaf");
    s->add_option("--file", c.tree_file, "file holding the tree JSON");
  };
  auto* nest = app.add_subcommand("nestings", "list the nestings of a tree");
  tree_opts(nest);
  nest->add_flag("--max-only", c.max_only, "maximal nestings only");
  nest->add_flag("--count", c.count, "print the count only");
  nest->add_option("--format", c.format, "json or csv");

  auto* real = app.add_subcommand("realize", "Loday realization: vertices and inequalities");
  tree_opts(real);
  real->add_option("--weight", c.weight, "comma separated positive integer weights, one per vertex");
  real->add_option("--format", c.format, "json, csv or off");
  real->add_option("--output", c.output, "OFF output path");

  auto* diag = app.add_subcommand("diagonal", "pairs of faces in the image of the cellular diagonal");
  tree_opts(diag);
  diag->add_flag("--count", c.count, "print the number of pairs only");
  diag->add_option("--vector", c.vector, "orientation vector, comma separated rationals");
  diag->add_flag("--allow-any-chamber", c.allow_any_chamber, "accept non-principal vectors off the walls");
  diag->add_option("--max-dim", c.max_dim, "largest polytope dimension to enumerate")->capture_default_str();
  diag->add_option("--jobs", c.jobs, "worker threads (default OPERAHEDRA_JOBS or 1)");
  diag->add_option("--format", c.format, "json, csv or off");
  diag->add_option("--output", c.output, "OFF output path");

  auto* orc = app.add_subcommand("oracle-check", "compare the formula with an independent oracle");
  tree_opts(orc);
  orc->add_option("--method", c.method, "cone, pointwise or projection")->capture_default_str();
  orc->add_option("--vector", c.vector, "orientation vector");
  orc->add_flag("--allow-any-chamber", c.allow_any_chamber, "accept non-principal vectors off the walls");
  orc->add_option("--max-dim", c.max_dim, "largest polytope dimension")->capture_default_str();
  orc->add_option("--jobs", c.jobs, "worker threads");

  auto* arr = app.add_subcommand("arrangement", "brute-force fundamental hyperplane arrangement");
  tree_opts(arr);
  arr->add_flag("--count", c.count, "print the number of hyperplanes only");
  arr->add_option("--max-dim", c.max_dim, "largest polytope dimension")->capture_default_str();
  arr->add_option("--jobs", c.jobs, "worker threads");
  arr->add_option("--format", c.format, "json or csv");

  auto* dif = app.add_subcommand("differential", "differential of a nested operadic tree");
  tree_opts(dif);
  dif->add_option("--nesting", c.nesting, "nesting as JSON edge lists (default trivial)");
  dif->add_option("--labeling", c.labeling, "vertex of each label, comma separated (default left-recursive)");

  auto* ten = app.add_subcommand("tensor", "signed cellular diagonal of a nested operadic tree");
  tree_opts(ten);
  ten->add_option("--nesting", c.nesting, "nesting as JSON edge lists (default trivial)");
  ten->add_option("--labeling", c.labeling, "vertex of each label, comma separated");
  ten->add_option("--max-dim", c.max_dim, "largest polytope dimension")->capture_default_str();

  auto* rep = app.add_subcommand("reproduce", "recompute the reference tables and compare");
  rep->add_option("--max-dim", c.max_dim, "largest permutahedron dimension to count (at most 6)")
      ->capture_default_str();
  rep->add_option("--jobs", c.jobs, "worker threads");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? Ok : Failure;
  }

  try {
    if (nest->parsed()) return cmd_nestings(c, out);
    if (real->parsed()) return cmd_realize(c, out);
    if (diag->parsed()) return cmd_diagonal(c, out);
    if (orc->parsed()) return cmd_oracle_check(c, out, err);
    if (arr->parsed()) return cmd_arrangement(c, out);
    if (dif->parsed()) return cmd_differential(c, out);
    if (ten->parsed()) return cmd_tensor(c, out);
    if (rep->parsed()) return cmd_reproduce(c, out);
  } catch (const InvalidTree& e) {
    err << "error: " << e.what() << "\n";
    return BadTree;
  } catch (const WallVector& e) {
    err << "error: " << e.what() << "\n";
    return OnWall;
  } catch (const DimensionCapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return TooLarge;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return Failure;
  }
  return Failure;
}

}  // namespace operahedra::cli
