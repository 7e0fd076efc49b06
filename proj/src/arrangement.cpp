#include "operahedra/arrangement.hpp"

#include "operahedra/parallel.hpp"
#include "operahedra/realization.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace operahedra {

namespace {

std::vector<EdgeSet> subsets_of_size(int m, int s) {
  std::vector<EdgeSet> out;
  for (EdgeSet x = 0; x < (EdgeSet(1) << m); ++x)
    if (popcount(x) == s) out.push_back(x);
  std::sort(out.begin(), out.end(), nest_less);
  return out;
}

}  // namespace

std::vector<DPair> generate_D(int m) {
  if (m < 1) throw std::invalid_argument("generate_D needs m >= 1");
  if (m > 20) throw std::invalid_argument("generate_D: m too large");
  std::vector<DPair> out;
  for (int s = 1; 2 * s <= m; ++s) {
    auto subs = subsets_of_size(m, s);
    for (EdgeSet I : subs)
      for (EdgeSet J : subs)
        if ((I & J) == 0 && min_edge(I) < min_edge(J)) out.push_back({I, J});
  }
  return out;
}

RatVector normal_of(const DPair& p, int m) {
  RatVector d(m, 0);
  for (int e : edges_of(p.I)) d[e - 1] = 1;
  for (int e : edges_of(p.J)) d[e - 1] = -1;
  return d;
}

std::string dpair_string(const DPair& p) {
  auto list = [](EdgeSet s) {
    std::string r = "{";
    auto es = edges_of(s);
    for (std::size_t k = 0; k < es.size(); ++k) r += (k ? "," : "") + std::to_string(es[k]);
    return r + "}";
  };
  return "(" + list(p.I) + "," + list(p.J) + ")";
}

RatVector principal_vector(int m) {
  if (m < 0 || m > 62) throw std::invalid_argument("principal_vector: m out of range");
  RatVector v(m);
  for (int j = 1; j <= m; ++j) v[j - 1] = Rational(Integer(1) << (m - j));
  return v;
}

std::vector<int> chamber_signature(const RatVector& v, int m) {
  if (static_cast<int>(v.size()) != m) throw std::invalid_argument("orientation vector has wrong length");
  std::vector<int> sig;
  if (m < 2) return sig;
  for (auto& p : generate_D(m)) {
    Rational s = dot(normal_of(p, m), v);
    if (s == 0) throw WallVector("vector lies on the wall " + dpair_string(p));
    sig.push_back(s > 0 ? 1 : -1);
  }
  return sig;
}

bool is_principal(const RatVector& v, int m) {
  if (static_cast<int>(v.size()) != m) return false;
  if (m < 2) return true;
  for (auto& p : generate_D(m))
    if (dot(normal_of(p, m), v) <= 0) return false;
  return true;
}

std::set<std::vector<int>> arrangement_bruteforce(const PlanarTree& t, int jobs) {
  const int m = t.edge_count();
  std::set<std::vector<int>> out;
  if (m < 2) return out;
  auto nestings = enumerate_nestings(t, false);
  std::map<std::vector<EdgeSet>, std::optional<std::vector<int>>> cache;
  std::mutex mu;
  auto direction = [&](const std::vector<EdgeSet>& nests) -> std::optional<std::vector<int>> {
    RatMatrix rows;
    for (EdgeSet s : nests) rows.push_back(characteristic(t, s));
    auto ker = kernel(rows, m);
    if (ker.size() != 1) return std::nullopt;
    RatVector k = ker[0];
    Rational lead = 0;
    for (auto& x : k)
      if (x != 0) {
        lead = x;
        break;
      }
    std::vector<int> d;
    for (auto& x : k) {
      Rational y = x / lead;
      if (y != 0 && y != 1 && y != -1) throw std::logic_error("non-trinary edge direction");
      d.push_back(static_cast<int>(y.convert_to<long>()));
    }
    return d;
  };
  auto results = parallel_map(nestings.size(), jobs, [&](std::size_t a) {
    std::set<std::vector<int>> local;
    for (auto& G : nestings) {
      if (nestings[a].size() + G.size() < static_cast<std::size_t>(m)) continue;
      std::vector<EdgeSet> u;
      std::set_union(nestings[a].begin(), nestings[a].end(), G.begin(), G.end(), std::back_inserter(u), nest_less);
      std::optional<std::vector<int>> d;
      bool hit = false;
      {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(u);
        if (it != cache.end()) {
          d = it->second;
          hit = true;
        }
      }
      if (!hit) {
        d = direction(u);
        std::lock_guard<std::mutex> lock(mu);
        cache.emplace(u, d);
      }
      if (d) local.insert(*d);
    }
    return local;
  });
  for (auto& s : results) out.insert(s.begin(), s.end());
  return out;
}

}  // namespace operahedra
