#include "operahedra/trees.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace operahedra {

std::vector<int> edges_of(EdgeSet s) {
  std::vector<int> out;
  while (s) {
    out.push_back(min_edge(s));
    s &= s - 1;
  }
  return out;
}

EdgeSet edge_set(const std::vector<int>& edges) {
  EdgeSet s = 0;
  for (int e : edges) {
    if (e < 1 || e > 63) throw std::invalid_argument("edge label out of range");
    s |= edge_bit(e);
  }
  return s;
}

PlanarTree PlanarTree::from_slots(const std::vector<std::vector<int>>& slots) {
  const int k = static_cast<int>(slots.size());
  if (k == 0) throw InvalidTree("tree has no vertices");
  if (k > 64) throw InvalidTree("trees are limited to 64 vertices");
  std::vector<int> new_id(k + 1, 0);
  std::vector<int> order;
  std::function<void(int)> visit = [&](int v) {
    if (v < 1 || v > k) throw InvalidTree("slot refers to unknown vertex");
    if (new_id[v]) throw InvalidTree("vertex reached twice");
    order.push_back(v);
    new_id[v] = static_cast<int>(order.size());
    if (slots[v - 1].empty()) throw InvalidTree("vertex with zero inputs (tree not reduced)");
    for (int s : slots[v - 1])
      if (s != 0) visit(s);
  };
  visit(1);
  if (static_cast<int>(order.size()) != k) throw InvalidTree("unreachable vertices");
  PlanarTree t;
  t.inputs_.assign(k, {});
  for (int v = 1; v <= k; ++v)
    for (int s : slots[v - 1]) t.inputs_[new_id[v] - 1].push_back(s == 0 ? 0 : new_id[s]);
  t.finish();
  return t;
}

PlanarTree PlanarTree::parse(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidTree(std::string("malformed tree JSON: ") + e.what());
  }
  if (!j.is_array()) throw InvalidTree("tree JSON must be an array");
  std::vector<std::vector<int>> slots;
  std::function<int(const nlohmann::json&)> build = [&](const nlohmann::json& node) {
    int id = static_cast<int>(slots.size()) + 1;
    if (id > 64) throw InvalidTree("trees are limited to 64 vertices");
    slots.emplace_back();
    if (node.empty()) throw InvalidTree("vertex with zero inputs (tree not reduced)");
    for (auto& in : node) {
      if (in.is_array()) {
        int c = build(in);
        slots[id - 1].push_back(c);
      } else if (in.is_number_integer() && in.get<long long>() == 0) {
        slots[id - 1].push_back(0);
      } else {
        throw InvalidTree("tree inputs must be 0 (leaf) or arrays");
      }
    }
    return id;
  };
  build(j);
  return from_slots(slots);
}

PlanarTree PlanarTree::corolla(int arity) {
  if (arity < 1) throw InvalidTree("corolla needs at least one input");
  return from_slots({std::vector<int>(arity, 0)});
}

PlanarTree PlanarTree::linear(int n) {
  if (n < 1) throw InvalidTree("need at least one vertex");
  std::vector<std::vector<int>> s(n);
  for (int v = 1; v < n; ++v) s[v - 1] = {v + 1};
  s[n - 1] = {0};
  return from_slots(s);
}

PlanarTree PlanarTree::two_leveled(int n) {
  if (n < 1) throw InvalidTree("need at least one vertex");
  if (n == 1) return corolla(1);
  std::vector<std::vector<int>> s(n);
  for (int v = 2; v <= n; ++v) {
    s[0].push_back(v);
    s[v - 1] = {0};
  }
  return from_slots(s);
}

void PlanarTree::finish() {
  const int k = n();
  parent_.assign(k, 0);
  size_.assign(k, 1);
  for (int v = 1; v <= k; ++v)
    for (int s : inputs_[v - 1])
      if (s) {
        if (s <= v) throw InvalidTree("labels are not in preorder");
        parent_[s - 1] = v;
      }
  for (int v = k; v >= 2; --v) size_[parent_[v - 1] - 1] += size_[v - 1];
  for (int v = 2; v <= k; ++v)
    if (parent_[v - 1] == 0) throw InvalidTree("vertex without parent");
}

int PlanarTree::leaves() const {
  int c = 0;
  for (auto& in : inputs_)
    for (int s : in) c += (s == 0);
  return c;
}

bool PlanarTree::is_linear() const {
  for (int v = 1; v <= n(); ++v) {
    int deg = (v > 1);
    for (int s : inputs(v)) deg += (s != 0);
    if (deg > 2) return false;
  }
  return true;
}

bool PlanarTree::is_two_leveled() const {
  for (int v = 2; v <= n(); ++v)
    if (parent(v) != 1) return false;
  return true;
}

std::string PlanarTree::to_json() const {
  std::function<std::string(int)> rec = [&](int v) {
    std::string s = "[";
    bool first = true;
    for (int x : inputs(v)) {
      if (!first) s += ",";
      first = false;
      s += x == 0 ? "0" : rec(x);
    }
    return s + "]";
  };
  return rec(1);
}

std::uint64_t closure_vertices(const PlanarTree& t, EdgeSet s) {
  std::uint64_t vs = 0;
  for (int e : edges_of(s)) {
    auto [p, c] = t.endpoints(e);
    vs |= std::uint64_t(1) << (p - 1);
    vs |= std::uint64_t(1) << (c - 1);
  }
  return vs;
}

bool is_nest(const PlanarTree& t, EdgeSet s) {
  if (s == 0 || (s & ~t.all_edges())) return false;
  return popcount(closure_vertices(t, s)) == popcount(s) + 1;
}

bool compatible(const PlanarTree& t, EdgeSet a, EdgeSet b) {
  EdgeSet c = a & b;
  if (c == a || c == b) return true;
  if (c) return false;
  return (closure_vertices(t, a) & closure_vertices(t, b)) == 0;
}

bool nest_less(EdgeSet a, EdgeSet b) {
  while (a && b) {
    int ea = min_edge(a), eb = min_edge(b);
    if (ea != eb) return ea < eb;
    a &= a - 1;
    b &= b - 1;
  }
  return !a && b;
}

void normalize(Nesting& N) {
  std::sort(N.begin(), N.end(), nest_less);
  N.erase(std::unique(N.begin(), N.end()), N.end());
}

bool nesting_less(const Nesting& a, const Nesting& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), nest_less);
}

bool is_nesting(const PlanarTree& t, const Nesting& N) {
  if (t.n() == 1) return N.empty();
  bool has_trivial = false;
  for (std::size_t i = 0; i < N.size(); ++i) {
    if (!is_nest(t, N[i])) return false;
    if (N[i] == t.all_edges()) has_trivial = true;
    for (std::size_t j = i + 1; j < N.size(); ++j)
      if (N[i] == N[j] || !compatible(t, N[i], N[j])) return false;
  }
  return has_trivial;
}

void validate_nesting(const PlanarTree& t, const Nesting& N) {
  if (!is_nesting(t, N)) throw std::invalid_argument("not a nesting of the tree: " + nesting_json(N));
}

std::vector<EdgeSet> all_nests(const PlanarTree& t) {
  std::set<EdgeSet> seen;
  std::vector<EdgeSet> frontier;
  const int m = t.edge_count();
  std::vector<EdgeSet> adjacent(m + 1, 0);
  for (int e = 1; e <= m; ++e)
    for (int f = 1; f <= m; ++f)
      if (e != f && (closure_vertices(t, edge_bit(e)) & closure_vertices(t, edge_bit(f)))) adjacent[e] |= edge_bit(f);
  for (int e = 1; e <= m; ++e) {
    seen.insert(edge_bit(e));
    frontier.push_back(edge_bit(e));
  }
  while (!frontier.empty()) {
    EdgeSet s = frontier.back();
    frontier.pop_back();
    EdgeSet nb = 0;
    for (int e : edges_of(s)) nb |= adjacent[e];
    nb &= ~s;
    for (int f : edges_of(nb)) {
      EdgeSet u = s | edge_bit(f);
      if (seen.insert(u).second) frontier.push_back(u);
    }
  }
  std::vector<EdgeSet> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), nest_less);
  return out;
}

Nesting trivial_nesting(const PlanarTree& t) {
  if (t.n() == 1) return {};
  return {t.all_edges()};
}

std::vector<Nesting> enumerate_nestings(const PlanarTree& t, bool max_only) {
  if (t.n() == 1) return {Nesting{}};
  const EdgeSet E = t.all_edges();
  std::vector<EdgeSet> L;
  for (EdgeSet s : all_nests(t))
    if (s != E) L.push_back(s);
  const std::size_t k = L.size();
  std::vector<std::vector<char>> comp(k, std::vector<char>(k, 0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) comp[i][j] = compatible(t, L[i], L[j]);
  std::vector<Nesting> out;
  std::vector<std::size_t> cur;
  const std::size_t target = static_cast<std::size_t>(t.n() - 2);
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (!max_only || cur.size() == target) {
      Nesting N{E};
      for (auto i : cur) N.push_back(L[i]);
      normalize(N);
      out.push_back(std::move(N));
    }
    for (std::size_t j = start; j < k; ++j) {
      bool ok = true;
      for (auto i : cur)
        if (!comp[i][j]) {
          ok = false;
          break;
        }
      if (!ok) continue;
      cur.push_back(j);
      rec(j + 1);
      cur.pop_back();
    }
  };
  rec(0);
  std::sort(out.begin(), out.end(), nesting_less);
  return out;
}

int permutation_sign(const std::vector<int>& perm) {
  int inv = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inv;
  return inv % 2 ? -1 : 1;
}

int top_vertex(const PlanarTree& t, EdgeSet s) {
  if (s == 0) throw std::invalid_argument("top_vertex of empty edge set");
  return __builtin_ctzll(closure_vertices(t, s)) + 1;
}

Quotient quotient_tree(const PlanarTree& t, int root, EdgeSet keep, EdgeSet contract) {
  std::vector<std::vector<int>> slots;
  std::vector<int> origin;
  std::vector<std::uint64_t> merged;
  std::function<int(int)> build;
  std::function<void(int, int)> expand = [&](int v, int id) {
    for (int s : t.inputs(v)) {
      if (s == 0) {
        slots[id - 1].push_back(0);
        continue;
      }
      EdgeSet e = edge_bit(s - 1);
      if (contract & e) {
        merged[id - 1] |= std::uint64_t(1) << (s - 1);
        expand(s, id);
      } else if (keep & e) {
        int c = build(s);
        slots[id - 1].push_back(c);
      } else {
        slots[id - 1].push_back(0);
      }
    }
  };
  build = [&](int v) {
    int id = static_cast<int>(slots.size()) + 1;
    slots.emplace_back();
    origin.push_back(v);
    merged.push_back(std::uint64_t(1) << (v - 1));
    expand(v, id);
    return id;
  };
  build(root);
  Quotient q;
  q.tree = PlanarTree::from_slots(slots);
  for (std::size_t w = 2; w <= origin.size(); ++w) q.local_to_global.push_back(origin[w - 1] - 1);
  q.vertex_of = merged;
  return q;
}

Contraction contract_nest(const PlanarTree& t, EdgeSet N) {
  if (!is_nest(t, N)) throw std::invalid_argument("contract_nest: not a nest");
  Quotient bar = quotient_tree(t, 1, t.all_edges() & ~N, N);
  Quotient tilde = quotient_tree(t, top_vertex(t, N), N, 0);
  Contraction c{bar.tree, tilde.tree, {}, 1};
  c.sigma.map = bar.local_to_global;
  c.sigma.map.insert(c.sigma.map.end(), tilde.local_to_global.begin(), tilde.local_to_global.end());
  c.sigma.sign = permutation_sign(c.sigma.map);
  std::uint64_t top = std::uint64_t(1) << (top_vertex(t, N) - 1);
  for (std::size_t v = 0; v < bar.vertex_of.size(); ++v)
    if (bar.vertex_of[v] & top) c.merged_vertex = static_cast<int>(v) + 1;
  return c;
}

Substitution substitute(const PlanarTree& t1, int i, const PlanarTree& t2, const std::optional<Nesting>& nest1,
                        const std::optional<Nesting>& nest2) {
  if (i < 1 || i > t1.n()) throw std::invalid_argument("substitute: no such vertex");
  if (t1.arity(i) != t2.leaves()) throw std::invalid_argument("substitute: arity mismatch");
  if (nest1.has_value() != nest2.has_value()) throw std::invalid_argument("substitute: supply both nestings or neither");
  if (t1.n() + t2.n() - 1 > 64) throw std::invalid_argument("substitute: result too large");
  std::vector<std::vector<int>> slots;
  Substitution out;
  out.vertex_map1.assign(t1.n() + 1, 0);
  out.vertex_map2.assign(t2.n() + 1, 0);
  std::function<int(int)> build1, build2;
  int leaf_counter = 0;
  auto fresh = [&]() {
    slots.emplace_back();
    return static_cast<int>(slots.size());
  };
  build1 = [&](int v) {
    if (v == i) return build2(1);
    int id = fresh();
    out.vertex_map1[v] = id;
    for (int s : t1.inputs(v)) {
      int c = s == 0 ? 0 : build1(s);
      slots[id - 1].push_back(c);
    }
    return id;
  };
  build2 = [&](int w) {
    int id = fresh();
    out.vertex_map2[w] = id;
    for (int s : t2.inputs(w)) {
      int c;
      if (s == 0) {
        int slot = t1.inputs(i)[leaf_counter++];
        c = slot == 0 ? 0 : build1(slot);
      } else {
        c = build2(s);
      }
      slots[id - 1].push_back(c);
    }
    return id;
  };
  build1(1);
  out.tree = PlanarTree::from_slots(slots);

  std::vector<int> map1(t1.edge_count() + 1), map2(t2.edge_count() + 1);
  for (int e = 1; e <= t1.edge_count(); ++e)
    map1[e] = (e + 1 == i ? out.vertex_map2[1] : out.vertex_map1[e + 1]) - 1;
  for (int e = 1; e <= t2.edge_count(); ++e) map2[e] = out.vertex_map2[e + 1] - 1;
  for (int e = 1; e <= t1.edge_count(); ++e) out.sigma.map.push_back(map1[e]);
  for (int e = 1; e <= t2.edge_count(); ++e) out.sigma.map.push_back(map2[e]);
  out.sigma.sign = permutation_sign(out.sigma.map);

  if (nest1) {
    validate_nesting(t1, *nest1);
    validate_nesting(t2, *nest2);
    auto apply = [](const std::vector<int>& mp, EdgeSet s) {
      EdgeSet r = 0;
      for (int e : edges_of(s)) r |= edge_bit(mp[e]);
      return r;
    };
    EdgeSet E2 = apply(map2, t2.all_edges());
    Nesting N;
    for (EdgeSet s : *nest1) {
      EdgeSet img = apply(map1, s);
      if (closure_vertices(t1, s) & (std::uint64_t(1) << (i - 1))) img |= E2;
      N.push_back(img);
    }
    for (EdgeSet s : *nest2) N.push_back(apply(map2, s));
    normalize(N);
    if (!is_nesting(out.tree, N)) throw std::logic_error("substitute: image is not a nesting");
    out.nesting = N;
  }
  return out;
}

std::pair<Nesting, Nesting> split_nesting(const PlanarTree& t, const Nesting& nesting, EdgeSet N,
                                          const Contraction& c) {
  const int p = c.t_bar.edge_count();
  std::vector<int> to_bar(t.edge_count() + 1, 0), to_tilde(t.edge_count() + 1, 0);
  for (int a = 1; a <= static_cast<int>(c.sigma.map.size()); ++a) {
    if (a <= p)
      to_bar[c.sigma.map[a - 1]] = a;
    else
      to_tilde[c.sigma.map[a - 1]] = a - p;
  }
  Nesting bar, tilde;
  for (EdgeSet M : nesting) {
    EdgeSet img = 0;
    if ((M & N) == M) {
      for (int e : edges_of(M)) img |= edge_bit(to_tilde[e]);
      tilde.push_back(img);
    } else {
      if ((M & N) != 0 && (M & N) != N) throw std::invalid_argument("split_nesting: nest crosses N");
      for (int e : edges_of(M & ~N)) img |= edge_bit(to_bar[e]);
      bar.push_back(img);
    }
  }
  normalize(bar);
  normalize(tilde);
  return {bar, tilde};
}

std::vector<EdgeSet> increasing_order(const Nesting& N) {
  std::vector<EdgeSet> out = N;
  std::sort(out.begin(), out.end(), [](EdgeSet a, EdgeSet b) {
    if (popcount(a) != popcount(b)) return popcount(a) > popcount(b);
    return min_edge(a) < min_edge(b);
  });
  return out;
}

namespace {

EdgeSet level_edge(const Nesting& N, EdgeSet nest) {
  EdgeSet lvl = nest;
  for (EdgeSet s : N)
    if (s != nest && (s & nest) == s) lvl &= ~s;
  return lvl;
}

}  // namespace

std::vector<Cover> covering_relations(const PlanarTree& t) {
  if (t.n() < 2) throw std::invalid_argument("covering_relations needs n >= 2");
  auto maxi = enumerate_nestings(t, true);
  std::vector<Cover> out;
  for (std::size_t a = 0; a < maxi.size(); ++a) {
    for (std::size_t b = a + 1; b < maxi.size(); ++b) {
      Nesting diffA, diffB;
      std::set_difference(maxi[a].begin(), maxi[a].end(), maxi[b].begin(), maxi[b].end(), std::back_inserter(diffA),
                          nest_less);
      std::set_difference(maxi[b].begin(), maxi[b].end(), maxi[a].begin(), maxi[a].end(), std::back_inserter(diffB),
                          nest_less);
      if (diffA.size() != 1) continue;
      int j = min_edge(level_edge(maxi[a], diffA[0]));
      int jp = min_edge(level_edge(maxi[b], diffB[0]));
      if (j < jp)
        out.emplace_back(maxi[a], maxi[b]);
      else
        out.emplace_back(maxi[b], maxi[a]);
    }
  }
  std::sort(out.begin(), out.end(), [](const Cover& x, const Cover& y) {
    if (x.first != y.first) return nesting_less(x.first, y.first);
    return nesting_less(x.second, y.second);
  });
  return out;
}

OrderedPartition nesting_partition(const PlanarTree& t, const Nesting& N) {
  if (!t.is_two_leveled()) throw std::invalid_argument("nesting_partition needs a 2-leveled tree");
  validate_nesting(t, N);
  std::vector<EdgeSet> chain = N;
  std::sort(chain.begin(), chain.end(), [](EdgeSet a, EdgeSet b) { return popcount(a) < popcount(b); });
  OrderedPartition P;
  EdgeSet prev = 0;
  for (EdgeSet s : chain) {
    P.push_back(edges_of(s & ~prev));
    prev = s;
  }
  return P;
}

Nesting partition_nesting(const PlanarTree& t, const OrderedPartition& P) {
  if (!t.is_two_leveled()) throw std::invalid_argument("partition_nesting needs a 2-leveled tree");
  Nesting N;
  EdgeSet acc = 0;
  for (auto& block : P) {
    if (block.empty()) throw std::invalid_argument("empty block");
    EdgeSet b = edge_set(block);
    if (b & acc) throw std::invalid_argument("blocks overlap");
    acc |= b;
    N.push_back(acc);
  }
  if (acc != t.all_edges()) throw std::invalid_argument("partition does not cover the edges");
  normalize(N);
  return N;
}

std::string partition_string(const OrderedPartition& P) {
  bool small = true;
  for (auto& b : P)
    for (int x : b) small = small && x < 10;
  std::string s;
  for (std::size_t k = 0; k < P.size(); ++k) {
    if (k) s += "|";
    for (std::size_t j = 0; j < P[k].size(); ++j) {
      if (j && !small) s += ",";
      s += std::to_string(P[k][j]);
    }
  }
  return s;
}

OrderedPartition parse_partition(const std::string& s) {
  OrderedPartition P;
  std::stringstream ss(s);
  std::string block;
  while (std::getline(ss, block, '|')) {
    std::vector<int> b;
    if (block.find(',') != std::string::npos) {
      std::stringstream bs(block);
      std::string x;
      while (std::getline(bs, x, ',')) b.push_back(std::stoi(x));
    } else {
      for (char ch : block) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) throw std::invalid_argument("bad partition: " + s);
        b.push_back(ch - '0');
      }
    }
    std::sort(b.begin(), b.end());
    P.push_back(b);
  }
  return P;
}

std::string nesting_json(const Nesting& N) {
  std::string s = "[";
  for (std::size_t k = 0; k < N.size(); ++k) {
    if (k) s += ",";
    s += "[";
    auto es = edges_of(N[k]);
    for (std::size_t j = 0; j < es.size(); ++j) s += (j ? "," : "") + std::to_string(es[j]);
    s += "]";
  }
  return s + "]";
}

Nesting parse_nesting(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed nesting JSON: ") + e.what());
  }
  if (!j.is_array()) throw std::invalid_argument("nesting JSON must be an array of arrays");
  Nesting N;
  for (auto& nest : j) {
    if (!nest.is_array()) throw std::invalid_argument("nest must be an array");
    std::vector<int> es;
    for (auto& e : nest) {
      if (!e.is_number_integer()) throw std::invalid_argument("edge labels must be integers");
      es.push_back(e.get<int>());
    }
    N.push_back(edge_set(es));
  }
  normalize(N);
  return N;
}

std::vector<PlanarTree> enumerate_trees(int n) {
  // forests[k]: ordered sequences of plane trees with k vertices in total, as JSON fragments
  std::vector<std::vector<std::vector<std::string>>> forests(n);
  std::vector<std::vector<std::string>> trees(n + 1);
  forests[0] = {{}};
  for (int k = 1; k <= n; ++k) {
    for (auto& f : forests[k - 1]) {
      std::string s = "[";
      if (f.empty()) s += "0";
      for (std::size_t j = 0; j < f.size(); ++j) s += (j ? "," : "") + f[j];
      trees[k].push_back(s + "]");
    }
    if (k == n) break;
    for (int first = 1; first <= k; ++first)
      for (auto& tr : trees[first])
        for (auto& rest : forests[k - first]) {
          std::vector<std::string> f{tr};
          f.insert(f.end(), rest.begin(), rest.end());
          forests[k].push_back(std::move(f));
        }
  }
  std::vector<PlanarTree> out;
  for (auto& s : trees[n]) out.push_back(PlanarTree::parse(s));
  return out;
}

}  // namespace operahedra
