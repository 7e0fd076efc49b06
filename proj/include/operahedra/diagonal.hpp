// Cellular image of the bot-top diagonal of operahedra.
#pragma once

#include "operahedra/arrangement.hpp"
#include "operahedra/realization.hpp"

namespace operahedra {

struct DiagonalPair {
  Nesting left, right;
  int dim_left = 0, dim_right = 0;
  bool operator==(const DiagonalPair& o) const { return left == o.left && right == o.right; }
};

// Universal formula test with the sign pattern of a chamber (all +1 = principal chamber).
class ImageTest {
 public:
  explicit ImageTest(const PlanarTree& t);
  ImageTest(const PlanarTree& t, const RatVector& v);
  bool operator()(const Nesting& left, const Nesting& right) const;
  // Bitset over D pairs witnessed by the nesting on the given side.
  std::vector<std::uint64_t> witnesses(const Nesting& N, bool left_side) const;
  bool covers(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) const;

 private:
  int m_;
  std::vector<DPair> D_;
  std::vector<int> sign_;
};

bool pair_in_image(const PlanarTree& t, const Nesting& left, const Nesting& right);
bool pair_in_image_cone(const PlanarTree& t, const Nesting& left, const Nesting& right, const RatVector& v);

// Complementary pairs in the image, ordered by (left, right) enumeration index.
std::vector<DiagonalPair> diagonal_image(const PlanarTree& t, const RatVector& v, int jobs = 1);
std::vector<DiagonalPair> diagonal_image(const PlanarTree& t, int jobs = 1);
std::size_t diagonal_count(const PlanarTree& t, const RatVector& v, int jobs = 1);

struct NonUniqueExtremum : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BotTop {
  RatVector bm, tp;
  Nesting bm_carrier, tp_carrier;
};
BotTop bot_top_point(const LodayPolytope& P, const RatVector& z, const RatVector& v);
BotTop bot_top_point(const PlanarTree& t, const Weight& w, const RatVector& z, const RatVector& v);

Nesting coarsen(const PlanarTree& target, const Nesting& source);
std::vector<DiagonalPair> diagonal_via_projection(const PlanarTree& t, int jobs = 1);

// tp(F) <= bm(G) in the poset of maximal nestings.
class TpBmFilter {
 public:
  TpBmFilter(const PlanarTree& t, const RatVector& v);
  bool geometric(const Nesting& left, const Nesting& right) const;
  // Inversion-set comparison; 2-leveled trees only.
  bool combinatorial(const Nesting& left, const Nesting& right) const;
  // Both paths, checked against each other when the tree is 2-leveled.
  bool operator()(const Nesting& left, const Nesting& right) const;
  const LodayPolytope& polytope() const { return P_; }
  bool leq(std::size_t a, std::size_t b) const { return reach_[a][b]; }

 private:
  LodayPolytope P_;
  RatVector v_;
  std::vector<std::vector<char>> reach_;
};
bool tp_bm_filter(const PlanarTree& t, const Nesting& left, const Nesting& right, const RatVector& v);

}  // namespace operahedra
