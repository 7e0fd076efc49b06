#include "operahedra/realization.hpp"

#include <algorithm>

namespace operahedra {

Weight standard_weight(const PlanarTree& t) { return Weight(t.n(), 1); }

namespace {

void check_weight(const PlanarTree& t, const Weight& w) {
  if (static_cast<int>(w.size()) != t.n()) throw std::invalid_argument("weight length must equal the vertex count");
  for (int x : w)
    if (x < 1) throw std::invalid_argument("weights must be positive integers");
}

long long weight_sum(std::uint64_t vs, const Weight& w) {
  long long s = 0;
  while (vs) {
    s += w[__builtin_ctzll(vs)];
    vs &= vs - 1;
  }
  return s;
}

bool satisfies(const HRep& h, const RatVector& x) {
  if (x.size() != h.dim) return false;
  for (auto& c : h.equalities)
    if (dot(c.a, x) != c.b) return false;
  for (auto& c : h.inequalities)
    if (dot(c.a, x) < c.b) return false;
  return true;
}

}  // namespace

RatVector loday_point(const PlanarTree& t, const Nesting& maximal, const Weight& w) {
  check_weight(t, w);
  if (!is_nesting(t, maximal) || static_cast<int>(maximal.size()) != std::max(t.n() - 1, 0))
    throw std::invalid_argument("loday_point needs a maximal nesting");
  RatVector x(t.edge_count());
  for (int i = 1; i <= t.edge_count(); ++i) {
    EdgeSet best = 0;
    for (EdgeSet s : maximal)
      if ((s & edge_bit(i)) && (best == 0 || popcount(s) < popcount(best))) best = s;
    std::uint64_t V = closure_vertices(t, best);
    int c = i + 1;
    std::uint64_t sub = 0;
    for (int v = c; v < c + t.subtree_size(c); ++v) sub |= std::uint64_t(1) << (v - 1);
    long long alpha = weight_sum(V & sub, w), beta = weight_sum(V & ~sub, w);
    x[i - 1] = Rational(alpha * beta);
  }
  return x;
}

Rational nest_bound(const PlanarTree& t, EdgeSet N, const Weight& w) {
  std::uint64_t V = closure_vertices(t, N);
  long long s = 0, sq = 0;
  while (V) {
    long long x = w[__builtin_ctzll(V)];
    s += x;
    sq += x * x;
    V &= V - 1;
  }
  return Rational((s * s - sq) / 2);
}

RatVector characteristic(const PlanarTree& t, EdgeSet N) {
  RatVector x(t.edge_count(), 0);
  for (int e : edges_of(N)) x[e - 1] = 1;
  return x;
}

LodayPolytope loday_polytope(const PlanarTree& t, const Weight& w) {
  check_weight(t, w);
  LodayPolytope P{t, w, enumerate_nestings(t, true), {}, {}, {}};
  for (auto& N : P.maximal) P.points.push_back(loday_point(t, N, w));
  P.hrep.dim = t.edge_count();
  if (t.n() >= 2) {
    P.hrep.equalities.push_back({characteristic(t, t.all_edges()), nest_bound(t, t.all_edges(), w)});
    for (EdgeSet s : all_nests(t)) {
      if (s == t.all_edges()) continue;
      P.nests.push_back(s);
      P.hrep.inequalities.push_back({characteristic(t, s), nest_bound(t, s, w)});
    }
  }
  return P;
}

LodayPolytope loday_polytope(const PlanarTree& t) { return loday_polytope(t, standard_weight(t)); }

ConeGenerators normal_cone(const PlanarTree& t, const Nesting& N) {
  validate_nesting(t, N);
  ConeGenerators c{static_cast<std::size_t>(t.edge_count()), {}};
  for (EdgeSet s : N) c.gens.push_back(scale(characteristic(t, s), -1));
  if (t.n() >= 2) c.gens.push_back(characteristic(t, t.all_edges()));
  return c;
}

std::vector<std::size_t> face_vertices(const LodayPolytope& P, const Nesting& nesting) {
  Nesting N = nesting;
  normalize(N);
  validate_nesting(P.tree, N);
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < P.maximal.size(); ++k)
    if (std::includes(P.maximal[k].begin(), P.maximal[k].end(), N.begin(), N.end(), nest_less)) out.push_back(k);
  return out;
}

RatVector barycenter(const LodayPolytope& P, const Nesting& N) {
  auto idx = face_vertices(P, N);
  RatVector c(P.dim(), 0);
  for (auto k : idx) c = add(c, P.points[k]);
  return scale(c, Rational(1, static_cast<long>(idx.size())));
}

Nesting carrier(const LodayPolytope& P, const RatVector& x) {
  if (!satisfies(P.hrep, x)) throw std::invalid_argument("carrier: point outside the polytope");
  Nesting N = trivial_nesting(P.tree);
  for (std::size_t k = 0; k < P.nests.size(); ++k)
    if (dot(P.hrep.inequalities[k].a, x) == P.hrep.inequalities[k].b) N.push_back(P.nests[k]);
  normalize(N);
  return N;
}

RatVector theta_embed(const PlanarTree& t1, int i, const PlanarTree& t2, const Weight& w1, const RatVector& x,
                      const RatVector& y) {
  check_weight(t1, w1);
  for (int v = 1; v <= t1.n(); ++v)
    if (w1[v - 1] != (v == i ? t2.n() : 1)) throw std::invalid_argument("theta_embed: weight mismatch");
  if (!satisfies(loday_polytope(t1, w1).hrep, x)) throw std::invalid_argument("theta_embed: x not in P_(t1,w')");
  if (!satisfies(loday_polytope(t2).hrep, y)) throw std::invalid_argument("theta_embed: y not in P_t2");
  Substitution s = substitute(t1, i, t2);
  RatVector z(s.tree.edge_count());
  for (std::size_t a = 0; a < x.size(); ++a) z[s.sigma.map[a] - 1] = x[a];
  for (std::size_t a = 0; a < y.size(); ++a) z[s.sigma.map[x.size() + a] - 1] = y[a];
  return z;
}

}  // namespace operahedra
