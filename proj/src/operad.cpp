#include "operahedra/operad.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

namespace operahedra {

namespace {

std::vector<int> identity_labeling(int n) {
  std::vector<int> l(n);
  std::iota(l.begin(), l.end(), 1);
  return l;
}

int labeling_sign(const OperadicTree& x) { return permutation_sign(x.labeling); }

int sign_of(const Rational& d) {
  if (d == 0) throw std::logic_error("degenerate orientation determinant");
  return d > 0 ? 1 : -1;
}

RatVector unit_diff(int m, int a, int b) {
  RatVector w(m, 0);
  w[a - 1] += 1;
  w[b - 1] -= 1;
  return w;
}

// Columns given as vectors.
Rational det_columns(const std::vector<RatVector>& cols) {
  const std::size_t d = cols.size();
  if (d == 0) return 1;
  RatMatrix A(d, RatVector(d));
  for (std::size_t c = 0; c < d; ++c)
    for (std::size_t r = 0; r < d; ++r) A[r][c] = cols[c][r];
  return determinant(A);
}

}  // namespace

OperadicTree operadic_tree(const PlanarTree& t, std::optional<Nesting> nesting) {
  OperadicTree x{t, identity_labeling(t.n()), nesting ? *nesting : trivial_nesting(t)};
  normalize(x.nesting);
  validate(x);
  return x;
}

void validate(const OperadicTree& x) {
  std::vector<int> l = x.labeling;
  std::sort(l.begin(), l.end());
  if (l != identity_labeling(x.tree.n())) throw std::invalid_argument("labeling is not a bijection onto the vertices");
  validate_nesting(x.tree, x.nesting);
}

int degree(const OperadicTree& x) { return x.tree.edge_count() - static_cast<int>(x.nesting.size()); }

bool is_left_recursive(const OperadicTree& x) { return x.labeling == identity_labeling(x.tree.n()); }

std::vector<LevelFactor> factorize(const PlanarTree& t, const Nesting& N) {
  std::vector<LevelFactor> out;
  for (EdgeSet s : increasing_order(N)) {
    LevelFactor f;
    f.nest = s;
    for (EdgeSet c : N) {
      if (c == s || (c & s) != c) continue;
      bool maximal = true;
      for (EdgeSet d : N)
        if (d != s && d != c && (c & d) == c && (d & s) == d) maximal = false;
      if (maximal) f.children.push_back(c);
    }
    EdgeSet inner = 0;
    for (EdgeSet c : f.children) inner |= c;
    f.level_edges = s & ~inner;
    f.level = quotient_tree(t, top_vertex(t, s), f.level_edges, inner);
    f.degree = popcount(f.level_edges) - 1;
    out.push_back(std::move(f));
  }
  return out;
}

EdgeSet globalize(const PlanarTree& t, const LevelFactor& f, EdgeSet M) {
  EdgeSet g = 0;
  for (int e : edges_of(M)) g |= edge_bit(f.level.local_to_global[e - 1]);
  std::uint64_t vs = closure_vertices(f.level.tree, M);
  for (EdgeSet c : f.children) {
    std::uint64_t top = std::uint64_t(1) << (top_vertex(t, c) - 1);
    for (int v = 1; v <= f.level.tree.n(); ++v)
      if ((f.level.vertex_of[v - 1] & top) && (vs >> (v - 1) & 1)) g |= c;
  }
  return g;
}

int koszul_sort_sign(const std::vector<EdgeSet>& word, const std::vector<int>& degrees, const Nesting& result) {
  auto order = increasing_order(result);
  if (order.size() != word.size()) throw std::logic_error("koszul_sort_sign: word does not match the nesting");
  std::vector<std::size_t> pos(word.size());
  for (std::size_t a = 0; a < word.size(); ++a) {
    auto it = std::find(order.begin(), order.end(), word[a]);
    if (it == order.end()) throw std::logic_error("koszul_sort_sign: nest missing");
    pos[a] = static_cast<std::size_t>(it - order.begin());
  }
  int s = 1;
  for (std::size_t a = 0; a < word.size(); ++a)
    for (std::size_t b = a + 1; b < word.size(); ++b)
      if (pos[a] > pos[b] && (degrees[a] & 1) && (degrees[b] & 1)) s = -s;
  return s;
}

SignedSum compose(const OperadicTree& a, int i, const OperadicTree& b) {
  validate(a);
  validate(b);
  const int k = a.tree.n(), l = b.tree.n();
  if (i < 1 || i > k) throw std::invalid_argument("compose: no such label");
  const int v = a.labeling[i - 1];
  auto s = substitute(a.tree, v, b.tree, a.nesting, b.nesting);
  const int p = a.tree.edge_count();

  OperadicTree r{s.tree, {}, *s.nesting};
  for (int j = 1; j <= k + l - 1; ++j) {
    if (j < i)
      r.labeling.push_back(s.vertex_map1[a.labeling[j - 1]]);
    else if (j <= i + l - 1)
      r.labeling.push_back(s.vertex_map2[b.labeling[j - i]]);
    else
      r.labeling.push_back(s.vertex_map1[a.labeling[j - l]]);
  }

  EdgeSet b_all = 0;
  for (int e = 1; e <= b.tree.edge_count(); ++e) b_all |= edge_bit(s.sigma.map[p + e - 1]);
  std::vector<EdgeSet> word;
  for (EdgeSet X : increasing_order(a.nesting)) {
    EdgeSet g = 0;
    for (int e : edges_of(X)) g |= edge_bit(s.sigma.map[e - 1]);
    if (closure_vertices(a.tree, X) >> (v - 1) & 1) g |= b_all;
    word.push_back(g);
  }
  for (EdgeSet Y : increasing_order(b.nesting)) {
    EdgeSet g = 0;
    for (int e : edges_of(Y)) g |= edge_bit(s.sigma.map[p + e - 1]);
    word.push_back(g);
  }
  std::vector<int> degrees;
  auto fs = factorize(r.tree, r.nesting);
  for (EdgeSet g : word)
    for (auto& f : fs)
      if (f.nest == g) degrees.push_back(f.degree);
  return SignedSum(r, koszul_sort_sign(word, degrees, r.nesting));
}

SignedSum differential(const OperadicTree& x) {
  validate(x);
  const PlanarTree& t = x.tree;
  SignedSum out;
  auto fs = factorize(t, x.nesting);
  int before = 0;
  for (std::size_t j = 0; j < fs.size(); ++j) {
    const auto& f = fs[j];
    const PlanarTree& T = f.level.tree;
    for (EdgeSet M : all_nests(T)) {
      if (M == T.all_edges()) continue;
      auto c = contract_nest(T, M);
      int local = -((T.edge_count() - popcount(M)) % 2 ? -1 : 1) * c.sigma.sign;
      EdgeSet G = globalize(t, f, M);
      Nesting next = x.nesting;
      next.push_back(G);
      normalize(next);
      std::vector<EdgeSet> word;
      std::vector<int> degrees;
      for (std::size_t a = 0; a < fs.size(); ++a) {
        word.push_back(fs[a].nest);
        degrees.push_back(a == j ? T.edge_count() - popcount(M) - 1 : fs[a].degree);
        if (a == j) {
          word.push_back(G);
          degrees.push_back(popcount(M) - 1);
        }
      }
      int sign = (before % 2 ? -1 : 1) * local * koszul_sort_sign(word, degrees, next);
      out.add({t, x.labeling, next}, sign);
    }
    before += f.degree;
  }
  return out;
}

SignedSum differential(const SignedSum& s) {
  SignedSum out;
  for (auto& [x, c] : s) out += differential(x).scaled(c);
  return out;
}

RatVector e_coordinates(const RatVector& w) {
  RatVector c;
  for (std::size_t j = 1; j < w.size(); ++j) c.push_back(-w[j]);
  return c;
}

std::vector<RatVector> cell_basis(const OperadicTree& x) {
  validate(x);
  const int m = x.tree.edge_count();
  std::vector<RatVector> basis;
  for (auto& f : factorize(x.tree, x.nesting)) {
    auto ls = edges_of(f.level_edges);
    for (std::size_t j = 1; j < ls.size(); ++j) basis.push_back(unit_diff(m, ls[0], ls[j]));
  }
  return basis;
}

int boundary_sign_geometric(const PlanarTree& t, const Nesting& facet) {
  validate_nesting(t, facet);
  if (facet.size() != 2) throw std::invalid_argument("boundary_sign_geometric: expects one non-trivial nest");
  EdgeSet N = facet[0] == t.all_edges() ? facet[1] : facet[0];
  const int m = t.edge_count();
  auto c = contract_nest(t, N);
  const int p = c.t_bar.edge_count(), q = c.t_tilde.edge_count();
  std::vector<RatVector> cols;
  RatVector nu(m, popcount(N));
  for (int e : edges_of(N)) nu[e - 1] -= m;
  cols.push_back(e_coordinates(nu));
  for (int j = 1; j < p; ++j) cols.push_back(e_coordinates(unit_diff(m, c.sigma.map[0], c.sigma.map[j])));
  for (int j = 1; j < q; ++j) cols.push_back(e_coordinates(unit_diff(m, c.sigma.map[p], c.sigma.map[p + j])));
  return sign_of(det_columns(cols));
}

int incidence_geometric(const LodayPolytope& P, const OperadicTree& cell, const Nesting& facet) {
  auto bF = cell_basis(cell);
  OperadicTree g{cell.tree, cell.labeling, facet};
  auto bG = cell_basis(g);
  if (bG.size() + 1 != bF.size()) throw std::invalid_argument("incidence_geometric: not a facet");
  RatVector out = sub(barycenter(P, facet), barycenter(P, cell.nesting));
  std::vector<RatVector> vecs{out};
  vecs.insert(vecs.end(), bG.begin(), bG.end());
  const std::size_t m = P.dim(), d = bF.size();
  RatMatrix A(m, RatVector(d));
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < d; ++c) A[r][c] = bF[c][r];
  std::vector<RatVector> cols;
  for (auto& w : vecs) {
    auto sol = solve(A, w);
    if (!sol) throw std::logic_error("incidence_geometric: vector outside the cell");
    cols.push_back(*sol);
  }
  return sign_of(det_columns(cols));
}

SignedSum boundary_geometric(const OperadicTree& x) {
  validate(x);
  SignedSum out;
  auto P = loday_polytope(x.tree);
  for (EdgeSet s : all_nests(x.tree)) {
    if (std::find(x.nesting.begin(), x.nesting.end(), s) != x.nesting.end()) continue;
    bool ok = true;
    for (EdgeSet o : x.nesting) ok = ok && compatible(x.tree, s, o);
    if (!ok) continue;
    Nesting next = x.nesting;
    next.push_back(s);
    normalize(next);
    out.add({x.tree, x.labeling, next}, incidence_geometric(P, x, next));
  }
  return out;
}

PairSum top_cell_diagonal(const PlanarTree& t) {
  static std::mutex mu;
  static std::map<PlanarTree, PairSum> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(t);
    if (it != cache.end()) return it->second;
  }
  PairSum out;
  auto id = identity_labeling(t.n());
  for (auto& p : diagonal_image(t)) {
    OperadicTree F{t, id, p.left}, G{t, id, p.right};
    std::vector<RatVector> cols;
    for (auto& w : cell_basis(F)) cols.push_back(e_coordinates(w));
    for (auto& w : cell_basis(G)) cols.push_back(e_coordinates(w));
    out.add({F, G}, sign_of(det_columns(cols)));
  }
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(t, out);
  return out;
}

PairSum tensor_diagonal(const OperadicTree& x) {
  validate(x);
  const PlanarTree& t = x.tree;
  auto fs = factorize(t, x.nesting);
  PairSum out;
  if (fs.empty()) {
    out.add({x, x}, labeling_sign(x));
    return out;
  }
  std::vector<std::vector<std::pair<PairKey, long long>>> local;
  for (auto& f : fs) {
    auto d = top_cell_diagonal(f.level.tree);
    local.emplace_back(d.begin(), d.end());
  }
  std::vector<std::size_t> pick(fs.size(), 0);
  for (;;) {
    long long coeff = labeling_sign(x);
    std::vector<EdgeSet> wl, wr;
    std::vector<int> dl, dr;
    Nesting L, R;
    // Hadamard interchange: (-1)^{|b_i||a_j|} for i < j
    std::vector<int> da(fs.size()), db(fs.size());
    for (std::size_t k = 0; k < fs.size(); ++k) {
      auto& [key, c] = local[k][pick[k]];
      coeff *= c;
      da[k] = degree(key.first);
      db[k] = degree(key.second);
      for (auto* side : {&key.first, &key.second}) {
        bool left = side == &key.first;
        for (auto& g : factorize(side->tree, side->nesting)) {
          EdgeSet G = globalize(t, fs[k], g.nest);
          (left ? wl : wr).push_back(G);
          (left ? dl : dr).push_back(g.degree);
          (left ? L : R).push_back(G);
        }
      }
    }
    for (std::size_t i = 0; i < fs.size(); ++i)
      for (std::size_t j = i + 1; j < fs.size(); ++j)
        if ((db[i] & 1) && (da[j] & 1)) coeff = -coeff;
    normalize(L);
    normalize(R);
    coeff *= koszul_sort_sign(wl, dl, L) * koszul_sort_sign(wr, dr, R);
    out.add({{t, x.labeling, L}, {t, x.labeling, R}}, coeff);

    std::size_t k = 0;
    while (k < fs.size() && ++pick[k] == local[k].size()) pick[k++] = 0;
    if (k == fs.size()) break;
  }
  return out;
}

PairSum tensor_diagonal(const SignedSum& s) {
  PairSum out;
  for (auto& [x, c] : s) out += tensor_diagonal(x).scaled(c);
  return out;
}

PairSum differential(const PairSum& s) {
  PairSum out;
  for (auto& [key, c] : s) {
    auto& [a, b] = key;
    for (auto& [da, ca] : differential(a)) out.add({da, b}, c * ca);
    long long sg = degree(a) % 2 ? -1 : 1;
    for (auto& [db, cb] : differential(b)) out.add({a, db}, c * cb * sg);
  }
  return out;
}

PairSum chain_map_check(const OperadicTree& x) {
  PairSum r = tensor_diagonal(differential(x));
  r -= differential(tensor_diagonal(x));
  return r;
}

std::optional<int> admissible_sign(const PlanarTree& t, const Nesting& left, const Nesting& right) {
  validate_nesting(t, left);
  validate_nesting(t, right);
  // inf_i: minimal edge of the smallest nest containing i
  auto inf = [](const Nesting& N, int i) {
    EdgeSet best = 0;
    for (EdgeSet s : N)
      if ((s & edge_bit(i)) && (best == 0 || popcount(s) < popcount(best))) best = s;
    return best ? min_edge(best) : i;
  };
  auto admissible = [&](const Nesting& N) {
    std::vector<int> ad;
    for (EdgeSet s : increasing_order(N)) {
      EdgeSet own = s;
      for (EdgeSet c : N)
        if (c != s && (c & s) == c) own &= ~c;
      for (int e : edges_of(own))
        if (e != inf(N, e)) ad.push_back(e);
    }
    return ad;
  };
  auto A = admissible(left), B = admissible(right);
  std::vector<int> values;
  int both = 0;
  auto side = [&](const std::vector<int>& mine, const std::vector<int>& other, const Nesting& Nm, const Nesting& No) {
    for (int i : mine) {
      bool shared = std::find(other.begin(), other.end(), i) != other.end();
      int a = inf(Nm, i), b = inf(No, i);
      values.push_back(shared && a != 1 && a < b ? a - 1 : i - 1);
    }
  };
  side(A, B, left, right);
  side(B, A, right, left);
  for (int i : A)
    if (std::find(B.begin(), B.end(), i) != B.end()) ++both;
  std::vector<int> sorted = values;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != identity_labeling(static_cast<int>(values.size()))) return std::nullopt;
  return (both % 2 ? -1 : 1) * permutation_sign(values);
}

OperadicTree act(const std::vector<int>& kappa, const OperadicTree& x) {
  std::vector<int> k = kappa;
  std::sort(k.begin(), k.end());
  if (k != identity_labeling(x.tree.n())) throw std::invalid_argument("act: kappa is not a permutation of the labels");
  OperadicTree y = x;
  for (int j = 1; j <= x.tree.n(); ++j) y.labeling[j - 1] = x.labeling[kappa[j - 1] - 1];
  return y;
}

SignedSum homotopy_relation(const PlanarTree& t) {
  SignedSum out;
  if (t.n() < 3) return out;
  for (EdgeSet N : all_nests(t)) {
    if (N == t.all_edges()) continue;
    // rebuild t as t' o_i t'' and read the shuffle off the substitution
    auto c = contract_nest(t, N);
    auto s = substitute(c.t_bar, c.merged_vertex, c.t_tilde);
    if (!(s.tree == t)) throw std::logic_error("homotopy_relation: substitution does not rebuild the tree");
    int sign = ((t.edge_count() - c.t_tilde.edge_count()) % 2 ? -1 : 1) * permutation_sign(s.sigma.map);
    Nesting two{t.all_edges(), N};
    normalize(two);
    out.add(operadic_tree(t, two), sign);
  }
  return out;
}

}  // namespace operahedra
