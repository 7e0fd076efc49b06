// Planar rooted trees, nests and nestings.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace operahedra {

struct InvalidTree : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Edge sets are bitmasks: bit (i-1) stands for edge i.
using EdgeSet = std::uint64_t;

inline EdgeSet edge_bit(int e) { return EdgeSet(1) << (e - 1); }
inline int popcount(EdgeSet s) { return __builtin_popcountll(s); }
std::vector<int> edges_of(EdgeSet s);
EdgeSet edge_set(const std::vector<int>& edges);
inline int min_edge(EdgeSet s) { return __builtin_ctzll(s) + 1; }

// Vertices are 1..n in clockwise preorder; edge i is the parent edge of vertex i+1.
// inputs[v-1] lists the input slots of v left to right: 0 for a leaf, otherwise a child vertex.
class PlanarTree {
 public:
  PlanarTree() : inputs_{{0}} {}
  // Renumbers into canonical preorder; slots use arbitrary vertex ids 1..n with root 1.
  static PlanarTree from_slots(const std::vector<std::vector<int>>& slots);
  static PlanarTree parse(const std::string& json);
  static PlanarTree corolla(int arity);
  static PlanarTree linear(int n);
  static PlanarTree two_leveled(int n);

  int n() const { return static_cast<int>(inputs_.size()); }
  int edge_count() const { return n() - 1; }
  EdgeSet all_edges() const { return n() >= 2 ? (EdgeSet(1) << (n() - 1)) - 1 : 0; }
  const std::vector<int>& inputs(int v) const { return inputs_[v - 1]; }
  int arity(int v) const { return static_cast<int>(inputs_[v - 1].size()); }
  int leaves() const;
  int parent(int v) const { return parent_[v - 1]; }
  // Endpoints of edge e: (parent vertex, child vertex).
  std::pair<int, int> endpoints(int e) const { return {parent_[e], e + 1}; }
  // Descendants of v (including v) form the preorder interval [v, v + subtree_size(v) - 1].
  int subtree_size(int v) const { return size_[v - 1]; }
  bool is_linear() const;
  bool is_two_leveled() const;
  std::string to_json() const;

  bool operator==(const PlanarTree& o) const { return inputs_ == o.inputs_; }
  bool operator<(const PlanarTree& o) const { return inputs_ < o.inputs_; }

 private:
  void finish();
  std::vector<std::vector<int>> inputs_;
  std::vector<int> parent_;
  std::vector<int> size_;
};

// Vertex set (bitmask over vertices, bit v-1) of the closure of an edge set.
std::uint64_t closure_vertices(const PlanarTree& t, EdgeSet s);

bool is_nest(const PlanarTree& t, EdgeSet s);
bool compatible(const PlanarTree& t, EdgeSet a, EdgeSet b);

// Nests of a nesting; sorted by nest_less, trivial nest included when n >= 2.
using Nesting = std::vector<EdgeSet>;

// Lexicographic comparison of sorted edge lists.
bool nest_less(EdgeSet a, EdgeSet b);
void normalize(Nesting& N);
bool nesting_less(const Nesting& a, const Nesting& b);
bool is_nesting(const PlanarTree& t, const Nesting& N);
void validate_nesting(const PlanarTree& t, const Nesting& N);
std::vector<EdgeSet> all_nests(const PlanarTree& t);
std::vector<Nesting> enumerate_nestings(const PlanarTree& t, bool max_only);
Nesting trivial_nesting(const PlanarTree& t);
inline int face_dim(const PlanarTree& t, const Nesting& N) {
  return t.n() == 1 ? 0 : t.n() - 1 - static_cast<int>(N.size());
}

struct Shuffle {
  std::vector<int> map;  // map[a-1] = edge label in the host tree
  int sign = 1;
};
int permutation_sign(const std::vector<int>& perm);

struct Contraction {
  PlanarTree t_bar;
  PlanarTree t_tilde;
  Shuffle sigma;           // t_bar edges 1..p, then t_tilde edges p+1..p+q
  int merged_vertex = 1;   // vertex of t_bar that t_tilde was contracted to
};
Contraction contract_nest(const PlanarTree& t, EdgeSet N);

// Induced tree on the closure of keep|contract rooted at vertex root: edges in
// keep survive, edges in contract are collapsed, other adjacent edges become leaves.
// local_to_global[e-1] is the original label of surviving edge e; vertex_of[v-1] the merged original vertices.
struct Quotient {
  PlanarTree tree;
  std::vector<int> local_to_global;
  std::vector<std::uint64_t> vertex_of;
};
Quotient quotient_tree(const PlanarTree& t, int root, EdgeSet keep, EdgeSet contract);
// Top vertex of the closure of a nonempty edge set.
int top_vertex(const PlanarTree& t, EdgeSet s);

struct Substitution {
  PlanarTree tree;
  std::optional<Nesting> nesting;
  Shuffle sigma;                  // t1 edges 1..p then t2 edges p+1..p+q
  std::vector<int> vertex_map1;   // t1 vertex -> result vertex (0 for the replaced vertex)
  std::vector<int> vertex_map2;   // t2 vertex -> result vertex
};
Substitution substitute(const PlanarTree& t1, int i, const PlanarTree& t2,
                        const std::optional<Nesting>& nest1 = std::nullopt,
                        const std::optional<Nesting>& nest2 = std::nullopt);

// Nestings on t_bar and t_tilde induced by a nesting containing N.
std::pair<Nesting, Nesting> split_nesting(const PlanarTree& t, const Nesting& nesting, EdgeSet N,
                                          const Contraction& c);

std::vector<EdgeSet> increasing_order(const Nesting& N);

using Cover = std::pair<Nesting, Nesting>;
std::vector<Cover> covering_relations(const PlanarTree& t);

// Ordered set partitions of {1..m} for 2-leveled trees.
using OrderedPartition = std::vector<std::vector<int>>;
OrderedPartition nesting_partition(const PlanarTree& t, const Nesting& N);
Nesting partition_nesting(const PlanarTree& t, const OrderedPartition& P);
std::string partition_string(const OrderedPartition& P);
OrderedPartition parse_partition(const std::string& s);

std::string nesting_json(const Nesting& N);
Nesting parse_nesting(const std::string& json);

// All reduced planar trees with n vertices up to leaves: childless vertices get one leaf.
std::vector<PlanarTree> enumerate_trees(int n);

}  // namespace operahedra
