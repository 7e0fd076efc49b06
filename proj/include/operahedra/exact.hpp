// Exact rational linear algebra, cone membership and small polytope conversions.
#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace operahedra {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;
using RatVector = std::vector<Rational>;
using RatMatrix = std::vector<RatVector>;  // row major

std::string to_string(const Rational& q);  // always "p/q"
Rational parse_rational(const std::string& s);
double to_double(const Rational& q);

Rational dot(const RatVector& a, const RatVector& b);
RatVector add(const RatVector& a, const RatVector& b);
RatVector sub(const RatVector& a, const RatVector& b);
RatVector scale(const RatVector& a, const Rational& c);
bool is_zero(const RatVector& a);
// Scale to coprime integers keeping the direction (zero vector unchanged).
RatVector primitive(const RatVector& a);

// Row echelon helpers. rank of the row space.
int rank(RatMatrix rows);
// Basis of {x : A x = 0}, A given by rows, ncols explicit.
RatMatrix kernel(const RatMatrix& A, std::size_t ncols);
// Solve A x = b; nullopt if inconsistent. Free variables set to 0.
std::optional<RatVector> solve(const RatMatrix& A, const RatVector& b);
Rational determinant(RatMatrix A);

struct ConeGenerators {
  std::size_t dim = 0;
  std::vector<RatVector> gens;
};

struct ConeMembership {
  bool contained = false;
  RatVector lambda;  // when contained: sum lambda_k g_k = v, lambda >= 0
  RatVector farkas;  // when not: <w,g> <= 0 for all g, <w,v> > 0
};

ConeMembership cone_contains(const ConeGenerators& c, const RatVector& v);
int cone_codim(const ConeGenerators& c);

struct Constraint {
  RatVector a;
  Rational b;
};

// Equations <a,x> = b and inequalities <a,x> >= b.
struct HRep {
  std::size_t dim = 0;
  std::vector<Constraint> equalities;
  std::vector<Constraint> inequalities;
};

struct EmptyRegion : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UnboundedRegion : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Sorted lexicographically, no duplicates.
std::vector<RatVector> vertices_of(const HRep& h);
// Facet normals are primitive integer vectors in the direction space of the hull.
HRep facets_from_vertices(const std::vector<RatVector>& V);

enum class Sense { Min, Max };
struct Extremum {
  RatVector vertex;
  bool unique = false;
};
Extremum extremal_vertex(const std::vector<RatVector>& V, const RatVector& w, Sense sense);

// Affine hull x = origin + sum t_k dirs[k]; free[k] is the coordinate equal to t_k - origin.
struct AffineChart {
  RatVector origin;
  RatMatrix dirs;
  std::vector<std::size_t> free;
};
AffineChart affine_chart(const std::vector<Constraint>& eqs, std::size_t dim);

}  // namespace operahedra
