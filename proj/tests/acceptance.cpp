// Acceptance suite: one PASS/FAIL line per criterion.
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

#include "operahedra/operad.hpp"
#include "operahedra/reference_tables.hpp"
#include "oracles.hpp"

using namespace operahedra;
using PairSet = std::set<std::pair<Nesting, Nesting>>;
using Clock = std::chrono::steady_clock;

static int jobs() {
  if (const char* e = std::getenv("OPERAHEDRA_JOBS"))
    if (std::atoi(e) > 0) return std::atoi(e);
  return std::max(1u, std::thread::hardware_concurrency());
}

static double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

static PairSet as_set(const std::vector<DiagonalPair>& ps) {
  PairSet s;
  for (auto& p : ps) s.insert({p.left, p.right});
  return s;
}

static PairSet listed(const PlanarTree& t, const std::vector<tables::Entry>& rows, bool blue_only) {
  PairSet s;
  for (auto& r : rows)
    if (!blue_only || r.blue)
      s.insert({partition_nesting(t, parse_partition(r.left)), partition_nesting(t, parse_partition(r.right))});
  return s;
}

static bool complementary(const PlanarTree& t, const Nesting& F, const Nesting& G) {
  return t.n() == 1 || static_cast<int>(F.size() + G.size()) == t.n();
}

struct Outcome {
  bool pass;
  std::string detail;
};

static Outcome counts() {
  std::ostringstream d;
  bool ok = true;
  auto t0 = Clock::now();
  for (int dim = 0; dim <= 4; ++dim) {
    auto c = diagonal_count(PlanarTree::two_leveled(dim + 2), principal_vector(dim + 1), jobs());
    d << c << (dim < 4 ? "," : "");
    ok = ok && static_cast<long long>(c) == tables::permutahedron_counts[dim];
  }
  double small = seconds_since(t0);
  ok = ok && small < 60;
  d << " in " << small << "s";
  t0 = Clock::now();
  auto c5 = diagonal_count(PlanarTree::two_leveled(7), principal_vector(6), jobs());
  double t5 = seconds_since(t0);
  ok = ok && c5 == 4802 && t5 < 900;
  d << "; dim 5: " << c5 << " in " << t5 << "s";
  t0 = Clock::now();
  auto c6 = diagonal_count(PlanarTree::two_leveled(8), principal_vector(7), jobs());
  d << "; dim 6 (optional): " << c6 << " in " << seconds_since(t0) << "s";
  ok = ok && static_cast<long long>(c6) == tables::permutahedron_counts[6];
  return {ok, d.str()};
}

static Outcome small_lists() {
  auto t1 = PlanarTree::two_leveled(3), t2 = PlanarTree::two_leveled(4);
  auto P = [&](const char* s) { return partition_nesting(t1, parse_partition(s)); };
  PairSet want1{{P("1|2"), P("12")}, {P("12"), P("2|1")}};
  bool a = as_set(diagonal_image(t1)) == want1 && listed(t1, tables::dim1, false) == want1;
  bool b = as_set(diagonal_image(t2)) == listed(t2, tables::dim2, false) && tables::dim2.size() == 8;
  return {a && b, std::string("dim 1 ") + (a ? "ok" : "differs") + ", dim 2 " + (b ? "ok" : "differs")};
}

static Outcome dim3_table() {
  auto t = PlanarTree::two_leveled(5);
  auto l = PlanarTree::linear(5);
  auto img = as_set(diagonal_image(t));
  bool table = img == listed(t, tables::dim3, false) && tables::dim3.size() == 50;
  PairSet preserved, projected;
  for (auto& [F, G] : img) {
    Nesting a = coarsen(l, F), b = coarsen(l, G);
    if (a.size() == F.size() && b.size() == G.size()) {
      preserved.insert({F, G});
      projected.insert({a, b});
    }
  }
  bool blue = preserved == listed(t, tables::dim3, true);
  bool lin = projected == as_set(diagonal_via_projection(l)) && projected == as_set(diagonal_image(l));
  std::ostringstream d;
  d << img.size() << " pairs, " << preserved.size() << " dimension-preserving, blue " << (blue ? "matches" : "differs")
    << ", projected pairs " << (lin ? "equal" : "differ from") << " the linear image";
  return {table && blue && lin, d.str()};
}

static Outcome cone_oracle() {
  long long pairs = 0, disagree = 0;
  for (int n = 1; n <= 5; ++n)
    for (auto& t : enumerate_trees(n)) {
      auto v = principal_vector(t.edge_count());
      auto all = enumerate_nestings(t, false);
      for (auto& F : all)
        for (auto& G : all)
          if (complementary(t, F, G)) {
            ++pairs;
            disagree += pair_in_image(t, F, G) != pair_in_image_cone(t, F, G, v);
          }
    }
  return {disagree == 0, std::to_string(pairs) + " complementary pairs, " + std::to_string(disagree) + " disagreements"};
}

static Outcome pointwise() {
  long long checked = 0, bad = 0;
  for (int n = 1; n <= 5; ++n)
    for (auto& t : enumerate_trees(n)) {
      auto P = loday_polytope(t);
      auto v = principal_vector(t.edge_count());
      for (auto& p : diagonal_image(t)) {
        ++checked;
        try {
          RatVector z = scale(add(barycenter(P, p.left), barycenter(P, p.right)), Rational(1, 2));
          auto r = bot_top_point(P, z, v);
          bad += !(r.bm_carrier == p.left && r.tp_carrier == p.right);
        } catch (const std::exception&) {
          ++bad;
        }
      }
    }
  return {bad == 0, std::to_string(checked) + " image pairs, " + std::to_string(bad) + " mismatches"};
}

static Outcome realization() {
  long long trees = 0, covers = 0, bad = 0;
  for (int n = 1; n <= 6; ++n)
    for (auto& t : enumerate_trees(n)) {
      ++trees;
      auto P = loday_polytope(t);
      std::vector<RatVector> pts = P.points;
      std::sort(pts.begin(), pts.end());
      pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
      if (pts.size() != P.maximal.size()) ++bad;
      if (n >= 2 && vertices_of(P.hrep) != pts) ++bad;
      if (t.is_linear() && static_cast<long long>(pts.size()) != oracle::catalan(n - 1)) ++bad;
      if (t.is_two_leveled() && static_cast<long long>(pts.size()) != oracle::factorial(n - 1)) ++bad;
      if (n == 1) continue;
      for (auto& [a, b] : covering_relations(t)) {
        ++covers;
        RatVector d = sub(loday_point(t, b, P.weight), loday_point(t, a, P.weight));
        int pos = -1, neg = -1, nonzero = 0;
        for (int j = 0; j < t.edge_count(); ++j) {
          nonzero += d[j] != 0;
          if (d[j] > 0) pos = j;
          if (d[j] < 0) neg = j;
        }
        if (nonzero != 2 || pos < 0 || neg < 0 || pos > neg || d[pos] != -d[neg]) ++bad;
      }
    }
  return {bad == 0, std::to_string(trees) + " trees, " + std::to_string(covers) + " covering edges, " +
                        std::to_string(bad) + " failures"};
}

static std::set<std::vector<int>> d_normals(int m) {
  std::set<std::vector<int>> out;
  for (auto& p : generate_D(m)) {
    std::vector<int> d(m, 0);
    for (int e : edges_of(p.I)) d[e - 1] = 1;
    for (int e : edges_of(p.J)) d[e - 1] = -1;
    out.insert(d);
  }
  return out;
}

static Outcome arrangement() {
  bool sizes = generate_D(2).size() == 1 && generate_D(3).size() == 3 && generate_D(4).size() == 9;
  bool exact = true, subset = true;
  for (int n = 2; n <= 5; ++n) {
    exact = exact && arrangement_bruteforce(PlanarTree::two_leveled(n), jobs()) == d_normals(n - 1);
    auto all = d_normals(n - 1);
    for (auto& t : enumerate_trees(n))
      for (auto& d : arrangement_bruteforce(t, jobs())) subset = subset && all.count(d);
  }
  return {sizes && exact && subset, std::string("|D| = 1,3,9 ") + (sizes ? "ok" : "wrong") + ", 2-leveled " +
                                        (exact ? "exact" : "differs") + ", subset " + (subset ? "ok" : "violated")};
}

static Outcome pyramid() {
  auto r = [](long p, long q = 1) { return Rational(p, q); };
  std::vector<RatVector> V{{r(0), r(0), r(1)},
                           {r(-1), r(0), r(0)},
                           {r(0), r(3, 2), r(-1, 2)},
                           {r(0), r(-3, 2), r(-1, 2)},
                           {r(3), r(0), r(-2)}};
  HRep h = facets_from_vertices(V);
  // outward normals; inequalities read <a,x> >= b
  std::vector<RatVector> normals;
  std::set<RatVector> got, want;
  for (auto& c : h.inequalities) {
    normals.push_back(scale(c.a, r(-1)));
    got.insert(primitive(normals.back()));
  }
  for (auto& w : std::vector<RatVector>{{r(1), r(1), r(1)},
                                        {r(-1), r(1), r(1)},
                                        {r(-1), r(-1), r(1)},
                                        {r(1), r(-1), r(1)},
                                        {r(-1, 2), r(0), r(-1)}})
    want.insert(primitive(w));
  bool facets = h.equalities.empty() && got == want;

  // faces as sets of tight facets, the polytope itself included
  struct Face {
    std::vector<std::size_t> facets;
    int dim;
  };
  std::map<std::vector<std::size_t>, Face> faces;
  const std::size_t k = normals.size();
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    std::vector<std::size_t> verts;
    for (std::size_t i = 0; i < V.size(); ++i) {
      bool on = true;
      for (std::size_t f = 0; f < k; ++f)
        if ((mask >> f) & 1) on = on && dot(h.inequalities[f].a, V[i]) == h.inequalities[f].b;
      if (on) verts.push_back(i);
    }
    if (verts.empty() || faces.count(verts)) continue;
    Face F;
    for (std::size_t f = 0; f < k; ++f) {
      bool all = true;
      for (auto i : verts) all = all && dot(h.inequalities[f].a, V[i]) == h.inequalities[f].b;
      if (all) F.facets.push_back(f);
    }
    RatMatrix diffs;
    for (auto i : verts) diffs.push_back(sub(V[i], V[verts[0]]));
    F.dim = rank(diffs);
    faces[verts] = F;
  }
  RatVector v{r(0), r(0), r(1)};
  // pairs with dim F + dim G > dim P must avoid v; the complementary ones containing v are the top cells
  long long pairs = 0, inside = 0, cells = 0;
  for (auto& [vf, F] : faces)
    for (auto& [vg, G] : faces) {
      if (F.dim + G.dim < 3) continue;
      ConeGenerators c{3, {}};
      for (auto f : F.facets) c.gens.push_back(scale(normals[f], r(-1)));
      for (auto g : G.facets) c.gens.push_back(normals[g]);
      bool in = cone_contains(c, v).contained;
      if (F.dim + G.dim == 3) {
        cells += in;
      } else {
        ++pairs;
        inside += in;
      }
    }
  std::ostringstream d;
  d << "facet normals " << (facets ? "match" : "differ") << ", " << faces.size() << " faces, " << pairs
    << " pairs with dim F + dim G > 3, v in the cone for " << inside << "; " << cells
    << " complementary pairs contain v";
  return {facets && faces.size() == 19 && inside == 0, d.str()};
}

static Outcome dg_layer() {
  long long cells = 0, sq = 0, sgn = 0, chain = 0;
  for (int n = 1; n <= 5; ++n)
    for (auto& t : enumerate_trees(n)) {
      auto top = operadic_tree(t);
      for (auto& [y, c] : differential(top)) sgn += boundary_sign_geometric(t, y.nesting) != c;
      for (auto& N : enumerate_nestings(t, false)) {
        ++cells;
        auto x = operadic_tree(t, N);
        sq += !differential(differential(x)).empty();
        if (n <= 4) chain += !chain_map_check(x).empty();
      }
    }
  std::ostringstream d;
  d << cells << " cells; d^2 failures " << sq << ", facet sign mismatches " << sgn << ", chain map residuals " << chain;
  return {sq == 0 && sgn == 0 && chain == 0, d.str()};
}

static Outcome magical() {
  std::vector<std::size_t> expect{1, 2, 6, 22};
  bool ok = true;
  std::ostringstream d;
  for (int n = 2; n <= 6; ++n) {
    auto t = PlanarTree::linear(n);
    TpBmFilter f(t, principal_vector(n - 1));
    PairSet tp;
    auto all = enumerate_nestings(t, false);
    for (auto& F : all)
      for (auto& G : all)
        if (complementary(t, F, G) && f(F, G)) tp.insert({F, G});
    auto brute = oracle::tamari_magical(n);
    bool same = tp == as_set(diagonal_image(t)) && tp == brute;
    if (n - 2 < static_cast<int>(expect.size())) same = same && tp.size() == expect[n - 2];
    ok = ok && same;
    d << (n > 2 ? "," : "") << tp.size();
  }
  return {ok, "counts " + d.str()};
}

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"permutahedron diagonal counts", counts},
      {"dimension 1 and 2 pair lists", small_lists},
      {"dimension 3 table and associahedron pairs", dim3_table},
      {"formula agrees with the cone oracle", cone_oracle},
      {"pointwise bot-top oracle", pointwise},
      {"Loday realizations", realization},
      {"fundamental hyperplane arrangement", arrangement},
      {"pyramid example", pyramid},
      {"dg layer signs", dg_layer},
      {"tp <= bm on linear trees", magical},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first << ": " << o.detail
              << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
