// Signed dg operad layer: composition, differential, orientations and the tensor product.
#pragma once

#include <map>
#include <optional>
#include <tuple>
#include <utility>

#include "operahedra/diagonal.hpp"

namespace operahedra {

// labeling[j-1] is the vertex carrying label j.
struct OperadicTree {
  PlanarTree tree;
  std::vector<int> labeling;
  Nesting nesting;

  bool operator==(const OperadicTree& o) const {
    return tree == o.tree && nesting == o.nesting && labeling == o.labeling;
  }
  bool operator<(const OperadicTree& o) const {
    return std::tie(tree, nesting, labeling) < std::tie(o.tree, o.nesting, o.labeling);
  }
};

// Left-recursive labeling; trivial nesting unless one is given.
OperadicTree operadic_tree(const PlanarTree& t, std::optional<Nesting> nesting = std::nullopt);
void validate(const OperadicTree& x);
int degree(const OperadicTree& x);
bool is_left_recursive(const OperadicTree& x);

template <class Key>
class Combination {
 public:
  Combination() = default;
  Combination(const Key& k, long long c) { add(k, c); }
  void add(const Key& k, long long c) {
    if (c == 0) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(k, c);
    } else if ((it->second += c) == 0) {
      terms_.erase(it);
    }
  }
  Combination& operator+=(const Combination& o) {
    for (auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  Combination& operator-=(const Combination& o) {
    for (auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  Combination scaled(long long s) const {
    Combination r;
    for (auto& [k, c] : terms_) r.add(k, c * s);
    return r;
  }
  long long coeff(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? 0 : it->second;
  }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }
  bool operator==(const Combination& o) const { return terms_ == o.terms_; }

 private:
  std::map<Key, long long> terms_;
};

using SignedSum = Combination<OperadicTree>;
using PairKey = std::pair<OperadicTree, OperadicTree>;
using PairSum = Combination<PairKey>;

// One factor of the increasing-order factorization of a nested tree.
struct LevelFactor {
  EdgeSet nest = 0;
  EdgeSet level_edges = 0;         // edges of nest outside its child nests
  std::vector<EdgeSet> children;   // maximal nests strictly inside
  Quotient level;                  // the nest with children contracted
  int degree = 0;                  // |level edges| - 1
};
std::vector<LevelFactor> factorize(const PlanarTree& t, const Nesting& N);
// Nest of t corresponding to the nest M of a level tree.
EdgeSet globalize(const PlanarTree& t, const LevelFactor& f, EdgeSet M);
// Sign of reordering a word of nests into the increasing order of result, Koszul rule on degrees.
int koszul_sort_sign(const std::vector<EdgeSet>& word, const std::vector<int>& degrees, const Nesting& result);

// a o_i b with i a label of a.
SignedSum compose(const OperadicTree& a, int i, const OperadicTree& b);

SignedSum differential(const OperadicTree& x);
SignedSum differential(const SignedSum& s);

// Orientation basis of a cell, from the level trees of its increasing order.
// A relabeling by kappa multiplies every orientation by sgn(kappa); that sign is kept out of the basis.
std::vector<RatVector> cell_basis(const OperadicTree& x);
// Coordinates in e_j = u_1 - u_{j+1}, for vectors with zero coordinate sum.
RatVector e_coordinates(const RatVector& w);

// Sign of det(nu, Theta e', Theta e'') for the facet {E, N} of the top cell.
int boundary_sign_geometric(const PlanarTree& t, const Nesting& facet);
// Incidence number of a facet of a cell, from barycenters of the standard Loday realization.
int incidence_geometric(const LodayPolytope& P, const OperadicTree& cell, const Nesting& facet);
SignedSum boundary_geometric(const OperadicTree& x);

// Top cell diagonal with determinant signs.
PairSum top_cell_diagonal(const PlanarTree& t);
PairSum tensor_diagonal(const OperadicTree& x);
PairSum tensor_diagonal(const SignedSum& s);
PairSum differential(const PairSum& s);
PairSum chain_map_check(const OperadicTree& x);

// (-1)^{|Ad(F) n Ad(G)|} sgn(sigma_FG) when the printed rule yields a permutation.
std::optional<int> admissible_sign(const PlanarTree& t, const Nesting& left, const Nesting& right);

// Precomposition of the labeling by kappa (kappa[j-1] = kappa(j)).
OperadicTree act(const std::vector<int>& kappa, const OperadicTree& x);

// mu_{t'} o_i mu_{t''} terms of the homotopy relation of t, one per nest, as two-nest cells of t.
SignedSum homotopy_relation(const PlanarTree& t);

}  // namespace operahedra
