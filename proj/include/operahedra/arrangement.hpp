// The fundamental hyperplane arrangement and orientation vectors.
#pragma once

#include "operahedra/exact.hpp"
#include "operahedra/trees.hpp"

#include <set>

namespace operahedra {

struct DPair {
  EdgeSet I = 0, J = 0;
  bool operator==(const DPair& o) const { return I == o.I && J == o.J; }
};

std::vector<DPair> generate_D(int m);
// +1 on I, -1 on J.
RatVector normal_of(const DPair& p, int m);
std::string dpair_string(const DPair& p);

struct WallVector : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

RatVector principal_vector(int m);
bool is_principal(const RatVector& v, int m);
// Sign of sum_I v - sum_J v for each pair of generate_D(m); throws WallVector on a zero sum.
std::vector<int> chamber_signature(const RatVector& v, int m);

// Trinary normals (leading +1) of codimension one cones -N(F) u N(G) over all pairs of nestings.
std::set<std::vector<int>> arrangement_bruteforce(const PlanarTree& t, int jobs = 1);

}  // namespace operahedra
