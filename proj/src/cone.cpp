#include "mdm/cone.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>

#include "mdm/errors.hpp"

namespace mdm {

namespace {

// Incremental double description. State is C = cone(rays) + span(lin) where
// lin is always the exact kernel of the constraints processed so far; rays
// are the extreme rays of C modulo that kernel.
struct DdState {
  std::size_t dim = 0;
  std::vector<ZVec> rays;
  std::vector<ZVec> lin;
  std::vector<ZVec> processed;
};

void dd_add_halfspace(DdState& s, const ZVec& h) {
  if (h.size() != s.dim) throw DimensionMismatch("halfspace normal has wrong length");
  if (is_zero_vec(h)) return;

  std::size_t lpivot = s.lin.size();
  for (std::size_t i = 0; i < s.lin.size(); ++i)
    if (dot(h, s.lin[i]) != 0) {
      lpivot = i;
      break;
    }

  if (lpivot < s.lin.size()) {
    // The constraint cuts the lineality space: slide everything along l0
    // into the hyperplane and keep the positive half of l0 as a new ray.
    ZVec l0 = s.lin[lpivot];
    Int v0 = dot(h, l0);
    std::vector<ZVec> newlin;
    newlin.reserve(s.lin.size() - 1);
    for (std::size_t i = 0; i < s.lin.size(); ++i) {
      if (i == lpivot) continue;
      Int vi = dot(h, s.lin[i]);
      ZVec l(s.dim);
      for (std::size_t j = 0; j < s.dim; ++j) l[j] = v0 * s.lin[i][j] - vi * l0[j];
      newlin.push_back(primitive(l));
    }
    Int a = abs(v0), sgn = v0 > 0 ? 1 : -1;
    for (auto& r : s.rays) {
      Int vr = dot(h, r);
      if (vr == 0) continue;
      ZVec adj(s.dim);
      for (std::size_t j = 0; j < s.dim; ++j) adj[j] = a * r[j] - sgn * vr * l0[j];
      r = primitive(adj);
    }
    ZVec r0 = v0 > 0 ? l0 : negate(l0);
    s.rays.push_back(primitive(r0));
    s.lin = std::move(newlin);
    s.processed.push_back(h);
    return;
  }

  std::vector<Int> val(s.rays.size());
  std::vector<std::size_t> pos, zero, neg;
  for (std::size_t i = 0; i < s.rays.size(); ++i) {
    val[i] = dot(h, s.rays[i]);
    (val[i] > 0 ? pos : val[i] < 0 ? neg : zero).push_back(i);
  }
  if (neg.empty()) {
    s.processed.push_back(h);
    return;
  }
  std::vector<ZVec> out;
  for (auto i : pos) out.push_back(s.rays[i]);
  for (auto i : zero) out.push_back(s.rays[i]);
  if (!pos.empty()) {
    // tight sets over every processed constraint drive the adjacency test
    std::vector<std::vector<bool>> tight(s.rays.size(),
                                         std::vector<bool>(s.processed.size()));
    for (std::size_t i = 0; i < s.rays.size(); ++i)
      for (std::size_t k = 0; k < s.processed.size(); ++k)
        tight[i][k] = dot(s.processed[k], s.rays[i]) == 0;
    auto adjacent = [&](std::size_t p, std::size_t n) {
      for (std::size_t w = 0; w < s.rays.size(); ++w) {
        if (w == p || w == n) continue;
        bool dominates = true;
        for (std::size_t k = 0; k < s.processed.size(); ++k)
          if (tight[p][k] && tight[n][k] && !tight[w][k]) {
            dominates = false;
            break;
          }
        if (dominates) return false;
      }
      return true;
    };
    for (auto p : pos)
      for (auto n : neg) {
        if (!adjacent(p, n)) continue;
        ZVec u(s.dim);
        for (std::size_t j = 0; j < s.dim; ++j)
          u[j] = -val[n] * s.rays[p][j] + val[p] * s.rays[n][j];
        out.push_back(primitive(u));
      }
  }
  s.rays = std::move(out);
  s.processed.push_back(h);
}

// v minus its orthogonal projection onto rowspan(b)
QVec project_off(const IntMatrix& b, const ZVec& v) {
  QVec out = to_rational(v);
  if (b.rows == 0) return out;
  IntMatrix gram = mul(b, b.transposed());
  ZVec bv = mul(b, v);
  auto z = rational_solve(gram, to_rational(bv));
  if (!z) throw InternalInconsistency("lineality basis has a singular Gram matrix");
  for (std::size_t i = 0; i < b.rows; ++i)
    for (std::size_t j = 0; j < b.cols; ++j) out[j] -= (*z)[i] * Rat(b.at(i, j));
  return out;
}

struct DdResult {
  std::vector<ZVec> rays;
  IntMatrix lin;
};

// Run the incremental construction, then canonicalize: HNF lineality basis,
// rays pushed into the orthogonal complement of the lineality, lex order.
DdResult dd(std::size_t dim, const std::vector<ZVec>& ineqs, const std::vector<ZVec>& eqs) {
  if (dim == 0) throw EmptyInput("cone in dimension zero");
  DdState s;
  s.dim = dim;
  s.lin = IntMatrix::identity(dim).row_list();
  for (const auto& e : eqs) {
    dd_add_halfspace(s, e);
    dd_add_halfspace(s, negate(e));
  }
  for (const auto& h : ineqs) dd_add_halfspace(s, h);

  DdResult res;
  res.lin = span_basis(IntMatrix::from_rows(s.lin, dim));
  for (const auto& r : s.rays) {
    ZVec p = primitive(project_off(res.lin, r));
    if (is_zero_vec(p)) throw InternalInconsistency("extreme ray collapsed into the lineality");
    res.rays.push_back(std::move(p));
  }
  std::sort(res.rays.begin(), res.rays.end(), [](const ZVec& a, const ZVec& b) { return lex_less(a, b); });
  res.rays.erase(std::unique(res.rays.begin(), res.rays.end()), res.rays.end());
  return res;
}

std::vector<ZVec> stack_rows(const std::vector<ZVec>& a, const IntMatrix& b) {
  std::vector<ZVec> rows = a;
  for (std::size_t i = 0; i < b.rows; ++i) rows.push_back(b.row(i));
  return rows;
}

Cone assemble(std::size_t dim, DdResult primal, DdResult dual) {
  Cone c;
  c.dim = dim;
  c.rays = std::move(primal.rays);
  c.lineality = std::move(primal.lin);
  c.facets = std::move(dual.rays);
  c.span_normals = std::move(dual.lin);
  std::size_t d1 = rank(IntMatrix::from_rows(stack_rows(c.rays, c.lineality), dim));
  if (d1 + c.span_normals.rows != dim)
    throw InternalInconsistency("primal and dual descriptions disagree on the span");
  std::size_t d2 = rank(IntMatrix::from_rows(stack_rows(c.facets, c.span_normals), dim));
  if (d2 + c.lineality.rows != dim)
    throw InternalInconsistency("primal and dual descriptions disagree on the lineality");
  return c;
}

}  // namespace

Cone cone_from_system(std::size_t dim, const std::vector<ZVec>& ineqs,
                      const std::vector<ZVec>& eqs) {
  DdResult primal = dd(dim, ineqs, eqs);
  DdResult dual = dd(dim, primal.rays, primal.lin.row_list());
  return assemble(dim, std::move(primal), std::move(dual));
}

Cone cone_from_generators(std::size_t dim, const std::vector<ZVec>& gens,
                          const std::vector<ZVec>& lin_gens) {
  DdResult dual = dd(dim, gens, lin_gens);
  DdResult primal = dd(dim, dual.rays, dual.lin.row_list());
  return assemble(dim, std::move(primal), std::move(dual));
}

Cone dualize(const Cone& c) {
  return cone_from_system(c.dim, c.rays, c.lineality.row_list());
}

Cone intersect(const Cone& a, const Cone& b) {
  if (a.dim != b.dim) throw DimensionMismatch("intersecting cones from different spaces");
  std::vector<ZVec> ineqs = a.facets;
  ineqs.insert(ineqs.end(), b.facets.begin(), b.facets.end());
  std::vector<ZVec> eqs = a.span_normals.row_list();
  auto more = b.span_normals.row_list();
  eqs.insert(eqs.end(), more.begin(), more.end());
  return cone_from_system(a.dim, ineqs, eqs);
}

Cone linear_image(const IntMatrix& m, const Cone& c) {
  if (m.cols != c.dim) throw DimensionMismatch("matrix does not act on the cone's space");
  std::vector<ZVec> gens, lins;
  for (const auto& r : c.rays) gens.push_back(mul(m, r));
  for (std::size_t i = 0; i < c.lineality.rows; ++i) lins.push_back(mul(m, c.lineality.row(i)));
  return cone_from_generators(m.rows, gens, lins);
}

std::size_t cone_dim(const Cone& c) { return c.dim - c.span_normals.rows; }

bool is_zero_cone(const Cone& c) { return cone_dim(c) == 0; }

std::string cone_key(const Cone& c) {
  std::ostringstream os;
  os << c.dim << '|';
  for (const auto& r : c.rays) os << show_vec(r);
  os << '|';
  for (std::size_t i = 0; i < c.lineality.rows; ++i) os << show_vec(c.lineality.row(i));
  return os.str();
}

ZVec relint_point(const Cone& c) {
  ZVec p(c.dim, Int(0));
  for (const auto& r : c.rays)
    for (std::size_t j = 0; j < c.dim; ++j) p[j] += r[j];
  return p;
}

Membership locate(const Cone& c, const QVec& x) {
  if (x.size() != c.dim) throw DimensionMismatch("point has wrong length");
  for (std::size_t i = 0; i < c.span_normals.rows; ++i)
    if (dot(c.span_normals.row(i), x) != 0) return Membership::Outside;
  bool boundary = false;
  for (const auto& f : c.facets) {
    Rat v = dot(f, x);
    if (v < 0) return Membership::Outside;
    if (v == 0) boundary = true;
  }
  return boundary ? Membership::Boundary : Membership::Interior;
}

bool contains(const Cone& c, const QVec& x) { return locate(c, x) != Membership::Outside; }
bool contains(const Cone& c, const ZVec& x) { return contains(c, to_rational(x)); }
bool in_relative_interior(const Cone& c, const QVec& x) {
  return locate(c, x) == Membership::Interior;
}
bool in_relative_interior(const Cone& c, const ZVec& x) {
  return in_relative_interior(c, to_rational(x));
}

bool subcone_of(const Cone& inner, const Cone& outer) {
  if (inner.dim != outer.dim) throw DimensionMismatch("comparing cones from different spaces");
  for (const auto& r : inner.rays)
    if (!contains(outer, r)) return false;
  for (std::size_t i = 0; i < inner.lineality.rows; ++i) {
    ZVec l = inner.lineality.row(i);
    for (std::size_t k = 0; k < outer.span_normals.rows; ++k)
      if (dot(outer.span_normals.row(k), l) != 0) return false;
    for (const auto& f : outer.facets)
      if (dot(f, l) != 0) return false;  // both signs of l must stay inside
  }
  return true;
}

bool is_face_of(const Cone& face, const Cone& c) {
  if (!subcone_of(face, c)) return false;
  std::vector<ZVec> eqs = c.span_normals.row_list();
  for (const auto& f : c.facets) {
    bool tight = true;
    for (const auto& r : face.rays)
      if (dot(f, r) != 0) {
        tight = false;
        break;
      }
    for (std::size_t i = 0; tight && i < face.lineality.rows; ++i)
      if (dot(f, face.lineality.row(i)) != 0) tight = false;
    if (tight) eqs.push_back(f);
  }
  return cone_from_system(c.dim, c.facets, eqs) == face;
}

std::vector<Cone> facet_faces(const Cone& c) {
  std::vector<Cone> out;
  std::vector<std::string> seen;
  for (const auto& f : c.facets) {
    std::vector<ZVec> eqs = c.span_normals.row_list();
    eqs.push_back(f);
    Cone face = cone_from_system(c.dim, c.facets, eqs);
    std::string key = cone_key(face);
    if (std::find(seen.begin(), seen.end(), key) == seen.end()) {
      seen.push_back(key);
      out.push_back(std::move(face));
    }
  }
  return out;
}

std::vector<Cone> faces_of(const Cone& c) {
  std::map<std::string, Cone> found;
  std::queue<Cone> todo;
  found.emplace(cone_key(c), c);
  todo.push(c);
  while (!todo.empty()) {
    Cone cur = std::move(todo.front());
    todo.pop();
    for (auto& g : facet_faces(cur)) {
      auto key = cone_key(g);
      if (found.emplace(key, g).second) todo.push(std::move(g));
    }
  }
  std::vector<Cone> out;
  out.reserve(found.size());
  for (auto& [key, cone] : found) out.push_back(std::move(cone));
  std::sort(out.begin(), out.end(), [](const Cone& a, const Cone& b) {
    if (cone_dim(a) != cone_dim(b)) return cone_dim(a) < cone_dim(b);
    return cone_key(a) < cone_key(b);
  });
  return out;
}

FanReport fan_validate(const Fan& f) {
  for (std::size_t i = 0; i < f.cones.size(); ++i)
    if (f.cones[i].dim != f.dim)
      return {false, "cone " + std::to_string(i) + " lives in the wrong ambient space"};
  for (std::size_t i = 0; i < f.cones.size(); ++i)
    for (std::size_t j = i + 1; j < f.cones.size(); ++j) {
      if (f.cones[i] == f.cones[j])
        return {false,
                "cones " + std::to_string(i) + " and " + std::to_string(j) + " coincide"};
      Cone common = intersect(f.cones[i], f.cones[j]);
      if (!is_face_of(common, f.cones[i]) || !is_face_of(common, f.cones[j]))
        return {false, "cones " + std::to_string(i) + " and " + std::to_string(j) +
                           " do not meet along a common face"};
    }
  return {true, ""};
}

bool fan_equal(const Fan& a, const Fan& b) {
  if (a.dim != b.dim || a.cones.size() != b.cones.size()) return false;
  std::set<std::string> ka, kb;
  for (const auto& c : a.cones) ka.insert(cone_key(c));
  for (const auto& c : b.cones) kb.insert(cone_key(c));
  return ka == kb;
}

void fan_fill_adjacency(Fan& f) {
  f.adjacency.clear();
  for (std::size_t i = 0; i < f.cones.size(); ++i)
    for (std::size_t j = i + 1; j < f.cones.size(); ++j) {
      Cone common = intersect(f.cones[i], f.cones[j]);
      if (cone_dim(common) + 1 == cone_dim(f.cones[i]) &&
          cone_dim(common) + 1 == cone_dim(f.cones[j]))
        f.adjacency.emplace_back(i, j);
    }
}

bool support_covers(const std::vector<Cone>& pieces, const Cone& whole) {
  if (pieces.empty()) return false;
  std::size_t d = cone_dim(whole);
  for (const auto& p : pieces)
    if (cone_dim(p) != d || !subcone_of(p, whole)) return false;
  std::map<std::string, std::pair<Cone, int>> walls;
  for (const auto& p : pieces)
    for (auto& w : facet_faces(p)) {
      auto key = cone_key(w);
      auto it = walls.find(key);
      if (it == walls.end())
        walls.emplace(key, std::make_pair(std::move(w), 1));
      else
        it->second.second += 1;
    }
  for (const auto& [key, entry] : walls) {
    const auto& [wall, count] = entry;
    if (count > 2) return false;
    if (count == 2) continue;
    bool on_boundary = false;
    for (const auto& f : whole.facets) {
      bool tight = true;
      for (const auto& r : wall.rays)
        if (dot(f, r) != 0) {
          tight = false;
          break;
        }
      for (std::size_t i = 0; tight && i < wall.lineality.rows; ++i)
        if (dot(f, wall.lineality.row(i)) != 0) tight = false;
      if (tight) {
        on_boundary = true;
        break;
      }
    }
    if (!on_boundary) return false;
  }
  ZVec sample = relint_point(whole);
  for (const auto& p : pieces)
    if (contains(p, sample)) return true;
  return false;
}

Polytope polytope_build(std::size_t dim, const std::vector<ZVec>& normals, const ZVec& offsets) {
  if (normals.size() != offsets.size())
    throw DimensionMismatch("constraint normals and offsets differ in number");
  Polytope p;
  p.dim = dim;
  p.normals = normals;
  p.offsets = offsets;

  std::vector<ZVec> hom;
  for (std::size_t i = 0; i < normals.size(); ++i) {
    if (normals[i].size() != dim) throw DimensionMismatch("constraint normal has wrong length");
    ZVec h = normals[i];
    h.push_back(offsets[i]);
    hom.push_back(std::move(h));
  }
  ZVec last(dim + 1, Int(0));
  last[dim] = 1;
  hom.push_back(std::move(last));

  DdResult cone = dd(dim + 1, hom, {});
  std::vector<ZVec> linheads;
  for (std::size_t i = 0; i < cone.lin.rows; ++i) {
    if (cone.lin.at(i, dim) != 0)
      throw InternalInconsistency("homogenization cone has lineality across t = 0");
    ZVec head = cone.lin.row(i);
    head.pop_back();
    linheads.push_back(std::move(head));
  }
  p.recession_lineality = span_basis(IntMatrix::from_rows(linheads, dim));
  for (const auto& r : cone.rays) {
    ZVec head(r.begin(), r.end() - 1);
    if (r[dim] == 0) {
      p.recession_rays.push_back(primitive(head));
    } else {
      QVec v(dim);
      for (std::size_t j = 0; j < dim; ++j) v[j] = Rat(head[j], r[dim]);
      p.vertices.push_back(std::move(v));
    }
  }
  std::sort(p.vertices.begin(), p.vertices.end(),
            [](const QVec& a, const QVec& b) { return lex_less(a, b); });
  std::sort(p.recession_rays.begin(), p.recession_rays.end(),
            [](const ZVec& a, const ZVec& b) { return lex_less(a, b); });
  p.empty = p.vertices.empty();
  p.bounded = p.recession_rays.empty() && p.recession_lineality.rows == 0;
  return p;
}

std::vector<ZVec> lattice_points(const Polytope& p, std::size_t budget) {
  if (!p.bounded) throw Unbounded("lattice point enumeration needs a bounded polytope");
  if (p.empty) return {};
  if (p.dim == 0) return {ZVec{}};
  std::vector<Int> lo(p.dim), hi(p.dim);
  for (std::size_t j = 0; j < p.dim; ++j) {
    Rat mn = p.vertices[0][j], mx = p.vertices[0][j];
    for (const auto& v : p.vertices) {
      mn = std::min(mn, v[j]);
      mx = std::max(mx, v[j]);
    }
    // ceil(mn) and floor(mx)
    Int fl = numerator(mx) / denominator(mx);
    if (fl * denominator(mx) > numerator(mx)) fl -= 1;
    Int cl = numerator(mn) / denominator(mn);
    if (cl * denominator(mn) < numerator(mn)) cl += 1;
    lo[j] = cl;
    hi[j] = fl;
    if (lo[j] > hi[j]) return {};
  }
  Int cells = 1;
  for (std::size_t j = 0; j < p.dim; ++j) cells *= hi[j] - lo[j] + 1;
  if (cells > Int(budget))
    throw PointBudgetExceeded("bounding box holds " + show(cells) +
                              " candidates, budget is " + std::to_string(budget));
  std::vector<ZVec> out;
  ZVec m = lo;
  for (;;) {
    bool inside = true;
    for (std::size_t i = 0; i < p.normals.size() && inside; ++i)
      if (dot(p.normals[i], m) < -p.offsets[i]) inside = false;
    if (inside) out.push_back(m);
    std::size_t j = p.dim;
    while (j > 0) {
      --j;
      if (m[j] < hi[j]) {
        m[j] += 1;
        for (std::size_t k = j + 1; k < p.dim; ++k) m[k] = lo[k];
        break;
      }
      if (j == 0) return out;
    }
  }
}

Fan normal_fan(const Polytope& p) {
  if (p.empty) throw EmptyInput("normal fan of an empty polyhedron");
  Fan fan;
  fan.dim = p.dim;
  if (p.dim == 0) {
    fan.cones.push_back(Cone{});
    return fan;
  }
  std::vector<std::string> seen;
  for (const auto& v : p.vertices) {
    std::vector<ZVec> gens;
    for (std::size_t i = 0; i < p.normals.size(); ++i)
      if (dot(p.normals[i], v) == -Rat(p.offsets[i])) gens.push_back(p.normals[i]);
    Cone sigma = cone_from_generators(p.dim, gens);
    auto key = cone_key(sigma);
    if (std::find(seen.begin(), seen.end(), key) == seen.end()) {
      seen.push_back(key);
      fan.cones.push_back(std::move(sigma));
    }
  }
  return fan;
}

}  // namespace mdm
