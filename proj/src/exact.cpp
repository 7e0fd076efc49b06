#include "operahedra/exact.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

namespace operahedra {

std::string to_string(const Rational& q) {
  return boost::multiprecision::numerator(q).str() + "/" + boost::multiprecision::denominator(q).str();
}

Rational parse_rational(const std::string& s_in) {
  std::string s = s_in;
  s.erase(std::remove_if(s.begin(), s.end(), ::isspace), s.end());
  if (s.empty()) throw std::invalid_argument("empty rational");
  auto check_int = [&](const std::string& t) {
    std::size_t k = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (k == t.size()) throw std::invalid_argument("bad rational: " + s_in);
    for (; k < t.size(); ++k)
      if (!std::isdigit(static_cast<unsigned char>(t[k]))) throw std::invalid_argument("bad rational: " + s_in);
  };
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    std::string p = s.substr(0, slash), q = s.substr(slash + 1);
    check_int(p);
    check_int(q);
    Integer den(q);
    if (den == 0) throw std::invalid_argument("zero denominator: " + s_in);
    return Rational(Integer(p), den);
  }
  auto dot_pos = s.find('.');
  if (dot_pos != std::string::npos) {
    std::string ip = s.substr(0, dot_pos), fp = s.substr(dot_pos + 1);
    bool neg = !ip.empty() && ip[0] == '-';
    if (!ip.empty() && (ip[0] == '-' || ip[0] == '+')) ip = ip.substr(1);
    if (ip.empty()) ip = "0";
    if (fp.empty()) fp = "0";
    check_int(ip);
    check_int(fp);
    Integer den = 1;
    for (std::size_t k = 0; k < fp.size(); ++k) den *= 10;
    Rational r = Rational(Integer(ip)) + Rational(Integer(fp), den);
    return neg ? Rational(-r) : r;
  }
  check_int(s);
  return Rational(Integer(s));
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

Rational dot(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  return s;
}

RatVector add(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("add: dimension mismatch");
  RatVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RatVector sub(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("sub: dimension mismatch");
  RatVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

RatVector scale(const RatVector& a, const Rational& c) {
  RatVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * c;
  return r;
}

bool is_zero(const RatVector& a) {
  return std::all_of(a.begin(), a.end(), [](const Rational& x) { return x == 0; });
}

RatVector primitive(const RatVector& a) {
  if (is_zero(a)) return a;
  Integer l = 1;
  for (auto& x : a)
    if (x != 0) l = boost::multiprecision::lcm(l, Integer(boost::multiprecision::denominator(x)));
  Integer g = 0;
  for (auto& x : a) {
    if (x == 0) continue;
    Rational y = x * l;
    g = boost::multiprecision::gcd(g, Integer(boost::multiprecision::abs(boost::multiprecision::numerator(y))));
  }
  return scale(a, Rational(l) / Rational(g));
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& M, std::size_t ncols) {
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < M.size(); ++c) {
    std::size_t p = r;
    while (p < M.size() && M[p][c] == 0) ++p;
    if (p == M.size()) continue;
    std::swap(M[p], M[r]);
    Rational inv = 1 / M[r][c];
    for (auto& x : M[r]) x *= inv;
    for (std::size_t i = 0; i < M.size(); ++i) {
      if (i == r || M[i][c] == 0) continue;
      Rational f = M[i][c];
      for (std::size_t j = 0; j < M[i].size(); ++j)
        if (M[r][j] != 0) M[i][j] -= f * M[r][j];
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

}  // namespace

int rank(RatMatrix rows) {
  if (rows.empty()) return 0;
  return static_cast<int>(rref(rows, rows[0].size()).size());
}

RatMatrix kernel(const RatMatrix& A, std::size_t ncols) {
  RatMatrix M = A;
  auto piv = rref(M, ncols);
  std::vector<bool> is_piv(ncols, false);
  for (auto c : piv) is_piv[c] = true;
  RatMatrix basis;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_piv[f]) continue;
    RatVector x(ncols, 0);
    x[f] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = -M[r][f];
    basis.push_back(std::move(x));
  }
  return basis;
}

std::optional<RatVector> solve(const RatMatrix& A, const RatVector& b) {
  if (A.size() != b.size()) throw std::invalid_argument("solve: dimension mismatch");
  std::size_t n = A.empty() ? 0 : A[0].size();
  RatMatrix M = A;
  for (std::size_t i = 0; i < M.size(); ++i) M[i].push_back(b[i]);
  auto piv = rref(M, n + 1);
  if (!piv.empty() && piv.back() == n) return std::nullopt;
  RatVector x(n, 0);
  for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = M[r][n];
  return x;
}

Rational determinant(RatMatrix A) {
  std::size_t n = A.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    if (A[c].size() != n) throw std::invalid_argument("determinant: not square");
    std::size_t p = c;
    while (p < n && A[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(A[p], A[c]);
      det = -det;
    }
    det *= A[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (A[i][c] == 0) continue;
      Rational f = A[i][c] / A[c][c];
      for (std::size_t j = c; j < n; ++j) A[i][j] -= f * A[c][j];
    }
  }
  return det;
}

// Phase-one simplex with Bland's rule on  A lambda + a = v, lambda, a >= 0.
ConeMembership cone_contains(const ConeGenerators& c, const RatVector& v) {
  const std::size_t d = c.dim, k = c.gens.size();
  if (v.size() != d) throw std::invalid_argument("cone_contains: dimension mismatch");
  for (auto& g : c.gens)
    if (g.size() != d) throw std::invalid_argument("cone_contains: generator dimension mismatch");

  const std::size_t ncol = k + d;
  std::vector<int> flip(d, 1);
  RatMatrix T(d, RatVector(ncol + 1, 0));
  for (std::size_t r = 0; r < d; ++r) {
    if (v[r] < 0) flip[r] = -1;
    for (std::size_t j = 0; j < k; ++j) T[r][j] = c.gens[j][r] * flip[r];
    T[r][k + r] = 1;
    T[r][ncol] = v[r] * flip[r];
  }
  std::vector<std::size_t> basis(d);
  std::iota(basis.begin(), basis.end(), k);
  auto cost = [&](std::size_t j) { return j >= k ? 1 : 0; };

  for (;;) {
    std::size_t enter = ncol;
    for (std::size_t j = 0; j < ncol && enter == ncol; ++j) {
      Rational z = cost(j);
      for (std::size_t r = 0; r < d; ++r)
        if (T[r][j] != 0 && cost(basis[r])) z -= T[r][j];
      if (z < 0) enter = j;
    }
    if (enter == ncol) break;
    std::size_t leave = d;
    Rational best;
    for (std::size_t r = 0; r < d; ++r) {
      if (T[r][enter] <= 0) continue;
      Rational ratio = T[r][ncol] / T[r][enter];
      if (leave == d || ratio < best || (ratio == best && basis[r] < basis[leave])) {
        leave = r;
        best = ratio;
      }
    }
    if (leave == d) throw std::logic_error("cone_contains: phase one unbounded");
    Rational inv = 1 / T[leave][enter];
    for (auto& x : T[leave]) x *= inv;
    for (std::size_t r = 0; r < d; ++r) {
      if (r == leave || T[r][enter] == 0) continue;
      Rational f = T[r][enter];
      for (std::size_t j = 0; j <= ncol; ++j)
        if (T[leave][j] != 0) T[r][j] -= f * T[leave][j];
    }
    basis[leave] = enter;
  }

  Rational obj = 0;
  for (std::size_t r = 0; r < d; ++r)
    if (cost(basis[r])) obj += T[r][ncol];

  ConeMembership out;
  if (obj == 0) {
    out.contained = true;
    out.lambda.assign(k, 0);
    for (std::size_t r = 0; r < d; ++r)
      if (basis[r] < k) out.lambda[basis[r]] = T[r][ncol];
    RatVector check(d, 0);
    for (std::size_t j = 0; j < k; ++j)
      if (out.lambda[j] != 0) check = add(check, scale(c.gens[j], out.lambda[j]));
    if (check != v) throw std::logic_error("cone_contains: certificate failed");
    return out;
  }
  // Simplex multipliers y = c_B^T B^{-1}; B^{-1} sits in the artificial columns.
  out.farkas.assign(d, 0);
  for (std::size_t r = 0; r < d; ++r) {
    Rational y = 0;
    for (std::size_t s = 0; s < d; ++s)
      if (cost(basis[s])) y += T[s][k + r];
    out.farkas[r] = y * flip[r];
  }
  for (auto& g : c.gens)
    if (dot(out.farkas, g) > 0) throw std::logic_error("cone_contains: Farkas certificate failed");
  if (dot(out.farkas, v) <= 0) throw std::logic_error("cone_contains: Farkas certificate failed");
  return out;
}

int cone_codim(const ConeGenerators& c) {
  return static_cast<int>(c.dim) - rank(c.gens);
}

AffineChart affine_chart(const std::vector<Constraint>& eqs, std::size_t dim) {
  RatMatrix M;
  for (auto& e : eqs) {
    if (e.a.size() != dim) throw std::invalid_argument("affine_chart: dimension mismatch");
    RatVector row = e.a;
    row.push_back(e.b);
    M.push_back(std::move(row));
  }
  auto piv = rref(M, dim + 1);
  if (!piv.empty() && piv.back() == dim) throw EmptyRegion("equations are inconsistent");
  AffineChart ch;
  ch.origin.assign(dim, 0);
  for (std::size_t r = 0; r < piv.size(); ++r) ch.origin[piv[r]] = M[r][dim];
  std::vector<bool> is_piv(dim, false);
  for (auto c : piv) is_piv[c] = true;
  for (std::size_t f = 0; f < dim; ++f) {
    if (is_piv[f]) continue;
    RatVector x(dim, 0);
    x[f] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = -M[r][f];
    ch.dirs.push_back(std::move(x));
    ch.free.push_back(f);
  }
  return ch;
}

namespace {

// Extreme rays of the pointed cone {y : H y >= 0} by double description.
RatMatrix extreme_rays(const RatMatrix& H, std::size_t D) {
  // initial simplicial cone from D independent rows
  std::vector<std::size_t> chosen;
  RatMatrix acc;
  for (std::size_t k = 0; k < H.size() && chosen.size() < D; ++k) {
    acc.push_back(H[k]);
    if (rank(acc) == static_cast<int>(acc.size()))
      chosen.push_back(k);
    else
      acc.pop_back();
  }
  if (chosen.size() < D) throw std::logic_error("extreme_rays: cone not pointed");

  struct Ray {
    RatVector y;
    std::vector<bool> zero;
  };
  std::vector<Ray> rays;
  std::vector<std::size_t> processed = chosen;
  for (std::size_t j = 0; j < D; ++j) {
    // column j of inverse of the chosen rows
    RatVector e(D, 0);
    e[j] = 1;
    auto y = solve(acc, e);
    Ray r{primitive(*y), std::vector<bool>(H.size(), false)};
    for (std::size_t i = 0; i < D; ++i) r.zero[chosen[i]] = (i != j);
    rays.push_back(std::move(r));
  }
  std::vector<bool> in_chosen(H.size(), false);
  for (auto c : chosen) in_chosen[c] = true;

  for (std::size_t k = 0; k < H.size(); ++k) {
    if (in_chosen[k]) continue;
    std::vector<Rational> val(rays.size());
    std::vector<std::size_t> pos, neg;
    std::vector<Ray> next;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      val[r] = dot(H[k], rays[r].y);
      if (val[r] > 0)
        pos.push_back(r);
      else if (val[r] < 0)
        neg.push_back(r);
    }
    for (std::size_t r = 0; r < rays.size(); ++r) {
      if (val[r] < 0) continue;
      Ray keep = rays[r];
      keep.zero[k] = (val[r] == 0);
      next.push_back(std::move(keep));
    }
    for (auto p : pos) {
      for (auto n : neg) {
        std::vector<bool> common(H.size(), false);
        std::size_t cnt = 0;
        for (auto c : processed)
          if (rays[p].zero[c] && rays[n].zero[c]) {
            common[c] = true;
            ++cnt;
          }
        if (cnt + 2 < D) continue;
        bool adjacent = true;
        for (std::size_t o = 0; o < rays.size() && adjacent; ++o) {
          if (o == p || o == n) continue;
          bool contains = true;
          for (auto c : processed)
            if (common[c] && !rays[o].zero[c]) {
              contains = false;
              break;
            }
          if (contains) adjacent = false;
        }
        if (!adjacent) continue;
        RatVector y = sub(scale(rays[n].y, val[p]), scale(rays[p].y, val[n]));
        Ray nr{primitive(y), common};
        nr.zero[k] = true;
        next.push_back(std::move(nr));
      }
    }
    rays = std::move(next);
    processed.push_back(k);
  }
  RatMatrix out;
  for (auto& r : rays) out.push_back(r.y);
  return out;
}

}  // namespace

std::vector<RatVector> vertices_of(const HRep& h) {
  for (auto& c : h.inequalities)
    if (c.a.size() != h.dim) throw std::invalid_argument("vertices_of: dimension mismatch");
  AffineChart ch = affine_chart(h.equalities, h.dim);
  const std::size_t d = ch.dirs.size();
  auto lift = [&](const RatVector& t) {
    RatVector x = ch.origin;
    for (std::size_t k = 0; k < d; ++k)
      if (t[k] != 0) x = add(x, scale(ch.dirs[k], t[k]));
    return x;
  };
  // homogenized rows (a', -b') acting on (t, s)
  RatMatrix H;
  for (auto& c : h.inequalities) {
    RatVector row(d + 1);
    for (std::size_t k = 0; k < d; ++k) row[k] = dot(c.a, ch.dirs[k]);
    row[d] = -(c.b - dot(c.a, ch.origin));
    H.push_back(std::move(row));
  }
  RatVector s_row(d + 1, 0);
  s_row[d] = 1;
  H.push_back(s_row);

  // remove lineality so the cone is pointed; any surviving vertex then means unbounded
  RatMatrix lin = kernel(H, d + 1);
  bool has_line = !lin.empty();
  for (auto& l : lin) {
    H.push_back(l);
    H.push_back(scale(l, -1));
  }
  RatMatrix rays = extreme_rays(H, d + 1);
  std::vector<RatVector> verts;
  bool recession = has_line;
  for (auto& r : rays) {
    if (r[d] > 0) {
      RatVector t(r.begin(), r.begin() + d);
      verts.push_back(lift(scale(t, 1 / r[d])));
    } else {
      recession = true;
    }
  }
  if (verts.empty()) throw EmptyRegion("region is empty");
  if (recession) throw UnboundedRegion("region is unbounded");
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  return verts;
}

HRep facets_from_vertices(const std::vector<RatVector>& V) {
  if (V.empty()) throw std::invalid_argument("facets_from_vertices: no points");
  const std::size_t dim = V[0].size();
  for (auto& p : V)
    if (p.size() != dim) throw std::invalid_argument("facets_from_vertices: dimension mismatch");
  HRep h;
  h.dim = dim;
  RatMatrix diffs;
  for (auto& p : V) diffs.push_back(sub(p, V[0]));
  for (auto& a : kernel(diffs, dim)) {
    RatVector n = primitive(a);
    h.equalities.push_back({n, dot(n, V[0])});
  }
  AffineChart ch = affine_chart(h.equalities, dim);
  const std::size_t d = ch.dirs.size();
  if (d == 0) return h;
  // cone of (c, c0) with <c, t_i> - c0 >= 0 for every point
  RatMatrix H;
  for (auto& p : V) {
    RatVector row(d + 1);
    for (std::size_t k = 0; k < d; ++k) row[k] = p[ch.free[k]] - ch.origin[ch.free[k]];
    row[d] = -1;
    H.push_back(std::move(row));
  }
  RatMatrix gram(d, RatVector(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) gram[i][j] = dot(ch.dirs[i], ch.dirs[j]);
  for (auto& r : extreme_rays(H, d + 1)) {
    RatVector c(r.begin(), r.begin() + d);
    if (is_zero(c)) continue;
    auto mu = solve(gram, c);
    RatVector a(dim, 0);
    for (std::size_t k = 0; k < d; ++k) a = add(a, scale(ch.dirs[k], (*mu)[k]));
    a = primitive(a);
    Rational b = dot(a, V[0]);
    for (auto& p : V) b = std::min(b, dot(a, p));
    h.inequalities.push_back({a, b});
  }
  std::sort(h.inequalities.begin(), h.inequalities.end(),
            [](const Constraint& x, const Constraint& y) { return x.a < y.a; });
  return h;
}

Extremum extremal_vertex(const std::vector<RatVector>& V, const RatVector& w, Sense sense) {
  if (V.empty()) throw std::invalid_argument("extremal_vertex: empty vertex list");
  Extremum e;
  Rational best;
  int count = 0;
  for (auto& p : V) {
    Rational val = dot(p, w);
    bool better = count == 0 || (sense == Sense::Min ? val < best : val > best);
    if (better) {
      best = val;
      e.vertex = p;
      count = 1;
    } else if (val == best) {
      ++count;
    }
  }
  e.unique = count == 1;
  return e;
}

}  // namespace operahedra
