#include "operahedra/diagonal.hpp"

#include "operahedra/parallel.hpp"

#include <algorithm>
#include <map>

namespace operahedra {

ImageTest::ImageTest(const PlanarTree& t) : m_(t.edge_count()) {
  if (m_ >= 2) {
    D_ = generate_D(m_);
    sign_.assign(D_.size(), 1);
  }
}

ImageTest::ImageTest(const PlanarTree& t, const RatVector& v) : m_(t.edge_count()) {
  if (m_ >= 2) {
    D_ = generate_D(m_);
    sign_ = chamber_signature(v, m_);
  } else if (static_cast<int>(v.size()) != m_) {
    throw std::invalid_argument("orientation vector has wrong length");
  }
}

std::vector<std::uint64_t> ImageTest::witnesses(const Nesting& N, bool left_side) const {
  std::vector<std::uint64_t> w((D_.size() + 63) / 64, 0);
  for (std::size_t h = 0; h < D_.size(); ++h) {
    for (EdgeSet s : N) {
      int d = sign_[h] * (popcount(s & D_[h].I) - popcount(s & D_[h].J));
      if (left_side ? d > 0 : d < 0) {
        w[h / 64] |= std::uint64_t(1) << (h % 64);
        break;
      }
    }
  }
  return w;
}

bool ImageTest::covers(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) const {
  for (std::size_t k = 0; k < a.size(); ++k) {
    std::uint64_t full = (k + 1 < a.size() || D_.size() % 64 == 0) ? ~std::uint64_t(0)
                                                                     : (std::uint64_t(1) << (D_.size() % 64)) - 1;
    if ((a[k] | b[k]) != full) return false;
  }
  return true;
}

bool ImageTest::operator()(const Nesting& left, const Nesting& right) const {
  return covers(witnesses(left, true), witnesses(right, false));
}

bool pair_in_image(const PlanarTree& t, const Nesting& left, const Nesting& right) {
  validate_nesting(t, left);
  validate_nesting(t, right);
  return ImageTest(t)(left, right);
}

bool pair_in_image_cone(const PlanarTree& t, const Nesting& left, const Nesting& right, const RatVector& v) {
  validate_nesting(t, left);
  validate_nesting(t, right);
  const int m = t.edge_count();
  if (static_cast<int>(v.size()) != m) throw std::invalid_argument("orientation vector has wrong length");
  ConeGenerators c{static_cast<std::size_t>(m), {}};
  for (EdgeSet s : left) c.gens.push_back(characteristic(t, s));
  for (EdgeSet s : right) c.gens.push_back(scale(characteristic(t, s), -1));
  if (m >= 1) {
    c.gens.push_back(characteristic(t, t.all_edges()));
    c.gens.push_back(scale(characteristic(t, t.all_edges()), -1));
  }
  return cone_contains(c, v).contained;
}

namespace {

template <class Emit>
void scan_pairs(const PlanarTree& t, const ImageTest& test, int jobs, Emit emit_row) {
  auto nestings = enumerate_nestings(t, false);
  const std::size_t k = nestings.size();
  std::vector<std::vector<std::uint64_t>> wl(k), wr(k);
  for (std::size_t a = 0; a < k; ++a) {
    wl[a] = test.witnesses(nestings[a], true);
    wr[a] = test.witnesses(nestings[a], false);
  }
  std::vector<std::vector<std::size_t>> by_size(t.n() + 1);
  for (std::size_t a = 0; a < k; ++a) by_size[nestings[a].size()].push_back(a);
  auto rows = parallel_map(k, jobs, [&](std::size_t a) {
    std::vector<std::size_t> hits;
    std::size_t need = t.n() - nestings[a].size();
    if (need < by_size.size())
      for (auto b : by_size[need])
        if (test.covers(wl[a], wr[b])) hits.push_back(b);
    return hits;
  });
  for (std::size_t a = 0; a < k; ++a) emit_row(nestings, a, rows[a]);
}

}  // namespace

std::vector<DiagonalPair> diagonal_image(const PlanarTree& t, const RatVector& v, int jobs) {
  if (t.n() == 1) return {DiagonalPair{{}, {}, 0, 0}};
  ImageTest test(t, v);
  std::vector<DiagonalPair> out;
  scan_pairs(t, test, jobs, [&](const std::vector<Nesting>& ns, std::size_t a, const std::vector<std::size_t>& hits) {
    for (auto b : hits) out.push_back({ns[a], ns[b], face_dim(t, ns[a]), face_dim(t, ns[b])});
  });
  return out;
}

std::vector<DiagonalPair> diagonal_image(const PlanarTree& t, int jobs) {
  if (t.n() == 1) return {DiagonalPair{{}, {}, 0, 0}};
  ImageTest test(t);
  std::vector<DiagonalPair> out;
  scan_pairs(t, test, jobs, [&](const std::vector<Nesting>& ns, std::size_t a, const std::vector<std::size_t>& hits) {
    for (auto b : hits) out.push_back({ns[a], ns[b], face_dim(t, ns[a]), face_dim(t, ns[b])});
  });
  return out;
}

std::size_t diagonal_count(const PlanarTree& t, const RatVector& v, int jobs) {
  if (t.n() == 1) return 1;
  ImageTest test(t, v);
  std::size_t count = 0;
  scan_pairs(t, test, jobs, [&](const std::vector<Nesting>&, std::size_t, const std::vector<std::size_t>& hits) {
    count += hits.size();
  });
  return count;
}

BotTop bot_top_point(const LodayPolytope& P, const RatVector& z, const RatVector& v) {
  const HRep& h = P.hrep;
  if (z.size() != h.dim || v.size() != h.dim) throw std::invalid_argument("bot_top_point: dimension mismatch");
  for (auto& c : h.equalities)
    if (dot(c.a, z) != c.b) throw std::invalid_argument("bot_top_point: z not in P");
  for (auto& c : h.inequalities)
    if (dot(c.a, z) < c.b) throw std::invalid_argument("bot_top_point: z not in P");
  HRep q = h;
  for (auto& c : h.inequalities) q.inequalities.push_back({scale(c.a, -1), c.b - 2 * dot(c.a, z)});
  auto verts = vertices_of(q);
  auto lo = extremal_vertex(verts, v, Sense::Min);
  auto hi = extremal_vertex(verts, v, Sense::Max);
  if (!lo.unique || !hi.unique) throw NonUniqueExtremum("bot_top_point: v is not generic for this fiber");
  if (hi.vertex != sub(scale(z, 2), lo.vertex)) throw std::logic_error("bot_top_point: tp != 2z - bm");
  return {lo.vertex, hi.vertex, carrier(P, lo.vertex), carrier(P, hi.vertex)};
}

BotTop bot_top_point(const PlanarTree& t, const Weight& w, const RatVector& z, const RatVector& v) {
  return bot_top_point(loday_polytope(t, w), z, v);
}

Nesting coarsen(const PlanarTree& target, const Nesting& source) {
  Nesting out;
  for (EdgeSet s : source) {
    if (s & ~target.all_edges()) throw std::invalid_argument("coarsen: edge count mismatch");
    EdgeSet rest = s;
    while (rest) {
      EdgeSet comp = edge_bit(min_edge(rest));
      for (bool grew = true; grew;) {
        grew = false;
        std::uint64_t cv = closure_vertices(target, comp);
        for (int e : edges_of(rest & ~comp))
          if (closure_vertices(target, edge_bit(e)) & cv) {
            comp |= edge_bit(e);
            grew = true;
          }
      }
      out.push_back(comp);
      rest &= ~comp;
    }
  }
  normalize(out);
  if (!is_nesting(target, out)) throw std::logic_error("coarsen: image is not a nesting");
  return out;
}

std::vector<DiagonalPair> diagonal_via_projection(const PlanarTree& t, int jobs) {
  if (t.n() == 1) return diagonal_image(t, jobs);
  PlanarTree source = PlanarTree::two_leveled(t.n());
  auto order = enumerate_nestings(t, false);
  std::map<Nesting, std::size_t, decltype(&nesting_less)> index(&nesting_less);
  for (std::size_t k = 0; k < order.size(); ++k) index[order[k]] = k;
  std::set<std::pair<std::size_t, std::size_t>> keep;
  for (auto& p : diagonal_image(source, jobs)) {
    Nesting a = coarsen(t, p.left), b = coarsen(t, p.right);
    if (a.size() == p.left.size() && b.size() == p.right.size()) keep.insert({index.at(a), index.at(b)});
  }
  std::vector<DiagonalPair> out;
  for (auto [a, b] : keep) out.push_back({order[a], order[b], face_dim(t, order[a]), face_dim(t, order[b])});
  return out;
}

TpBmFilter::TpBmFilter(const PlanarTree& t, const RatVector& v) : P_(loday_polytope(t)), v_(v) {
  if (v.size() != P_.dim()) throw std::invalid_argument("orientation vector has wrong length");
  const std::size_t k = P_.maximal.size();
  reach_.assign(k, std::vector<char>(k, 0));
  if (t.n() < 2) {
    reach_[0][0] = 1;
    return;
  }
  std::map<Nesting, std::size_t, decltype(&nesting_less)> index(&nesting_less);
  for (std::size_t a = 0; a < k; ++a) index[P_.maximal[a]] = a;
  std::vector<std::vector<std::size_t>> up(k);
  for (auto& [lo, hi] : covering_relations(t)) up[index.at(lo)].push_back(index.at(hi));
  for (std::size_t a = 0; a < k; ++a) {
    std::vector<std::size_t> stack{a};
    reach_[a][a] = 1;
    while (!stack.empty()) {
      auto x = stack.back();
      stack.pop_back();
      for (auto y : up[x])
        if (!reach_[a][y]) {
          reach_[a][y] = 1;
          stack.push_back(y);
        }
    }
  }
}

bool TpBmFilter::geometric(const Nesting& left, const Nesting& right) const {
  auto pick = [&](const Nesting& N, Sense s) {
    auto idx = face_vertices(P_, N);
    std::vector<RatVector> pts;
    for (auto i : idx) pts.push_back(P_.points[i]);
    auto e = extremal_vertex(pts, v_, s);
    if (!e.unique) throw NonUniqueExtremum("tp/bm: v is not generic");
    for (auto i : idx)
      if (P_.points[i] == e.vertex) return i;
    throw std::logic_error("tp/bm: vertex lookup failed");
  };
  return reach_[pick(left, Sense::Max)][pick(right, Sense::Min)];
}

bool TpBmFilter::combinatorial(const Nesting& left, const Nesting& right) const {
  const PlanarTree& t = P_.tree;
  auto word = [&](const Nesting& N, bool decreasing) {
    std::vector<int> w;
    for (auto block : nesting_partition(t, N)) {
      if (decreasing) std::reverse(block.begin(), block.end());
      w.insert(w.end(), block.begin(), block.end());
    }
    return w;
  };
  auto inversions = [](const std::vector<int>& w) {
    std::set<std::pair<int, int>> inv;
    for (std::size_t a = 0; a < w.size(); ++a)
      for (std::size_t b = a + 1; b < w.size(); ++b)
        if (w[a] > w[b]) inv.insert({w[b], w[a]});
    return inv;
  };
  auto a = inversions(word(left, true)), b = inversions(word(right, false));
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool TpBmFilter::operator()(const Nesting& left, const Nesting& right) const {
  bool g = geometric(left, right);
  if (P_.tree.is_two_leveled() && P_.tree.n() >= 2 && combinatorial(left, right) != g)
    throw std::logic_error("tp/bm: geometric and combinatorial paths disagree");
  return g;
}

bool tp_bm_filter(const PlanarTree& t, const Nesting& left, const Nesting& right, const RatVector& v) {
  return TpBmFilter(t, v)(left, right);
}

}  // namespace operahedra
