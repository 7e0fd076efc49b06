// Loday realizations of operahedra.
#pragma once

#include "operahedra/exact.hpp"
#include "operahedra/trees.hpp"

namespace operahedra {

using Weight = std::vector<int>;
Weight standard_weight(const PlanarTree& t);

struct LodayPolytope {
  PlanarTree tree;
  Weight weight;
  std::vector<Nesting> maximal;    // enumeration order
  std::vector<RatVector> points;   // points[k] = loday_point(maximal[k])
  HRep hrep;                        // inequality k belongs to nests[k]
  std::vector<EdgeSet> nests;
  std::size_t dim() const { return tree.edge_count(); }
};

RatVector loday_point(const PlanarTree& t, const Nesting& maximal, const Weight& w);
// Right hand side of the nest inequality: sum over pairs of vertices of t(N) of weight products.
Rational nest_bound(const PlanarTree& t, EdgeSet N, const Weight& w);
LodayPolytope loday_polytope(const PlanarTree& t, const Weight& w);
LodayPolytope loday_polytope(const PlanarTree& t);

RatVector characteristic(const PlanarTree& t, EdgeSet N);
ConeGenerators normal_cone(const PlanarTree& t, const Nesting& N);

// Indices into P.maximal of the maximal nestings containing N.
std::vector<std::size_t> face_vertices(const LodayPolytope& P, const Nesting& N);
RatVector barycenter(const LodayPolytope& P, const Nesting& N);
// Minimal face containing x: the trivial nest plus the tight nest inequalities.
Nesting carrier(const LodayPolytope& P, const RatVector& x);

// Point of P_t for t = t1 o_i t2 from x in P_(t1, w') and y in P_(t2).
RatVector theta_embed(const PlanarTree& t1, int i, const PlanarTree& t2, const Weight& w1, const RatVector& x,
                      const RatVector& y);

}  // namespace operahedra
