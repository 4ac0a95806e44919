#include "mdm/chambers.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "mdm/errors.hpp"

namespace mdm {

std::string wall_kind_name(WallKind k) {
  switch (k) {
    case WallKind::Fiber: return "fiber";
    case WallKind::Divisorial: return "divisorial";
    case WallKind::Flip: return "flip";
  }
  return "";
}

namespace {

// Every wall of the decomposition lies on a hyperplane spanned by r-1
// independent generator classes. Normals are primitive with positive leading
// entry, deduplicated.
std::vector<ZVec> candidate_normals(const DegreeMatrix& d) {
  std::vector<ZVec> out;
  std::set<std::string> seen;
  const std::size_t k = d.r - 1;
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  for (;;) {
    std::vector<ZVec> rows;
    for (std::size_t i : pick) rows.push_back(d.cols[i]);
    IntMatrix span = IntMatrix::from_rows(rows, d.r);
    IntMatrix ker = span_kernel(span);
    if (ker.rows == 1) {
      ZVec nrm = primitive(ker.row(0));
      for (std::size_t j = 0; j < nrm.size(); ++j) {
        if (nrm[j] == 0) continue;
        if (nrm[j] < 0) nrm = negate(nrm);
        break;
      }
      if (seen.insert(show_vec(nrm)).second) out.push_back(nrm);
    }
    // next k-combination of {0..n-1}
    if (k == 0) break;
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (pick[i] + (k - i) < d.n) {
        ++pick[i];
        for (std::size_t j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
        break;
      }
      if (i == 0) return out;
    }
  }
  return out;
}

std::vector<Cone> arrangement_cells(const Cone& eff, const std::vector<ZVec>& normals) {
  const std::size_t full = cone_dim(eff);
  std::vector<Cone> cells{eff};
  for (const auto& nrm : normals) {
    std::vector<Cone> next;
    for (const auto& c : cells) {
      std::vector<ZVec> ineqs = c.facets;
      ineqs.push_back(nrm);
      Cone pos = cone_from_system(c.dim, ineqs, c.span_normals.row_list());
      ineqs.back() = negate(nrm);
      Cone neg = cone_from_system(c.dim, ineqs, c.span_normals.row_list());
      if (cone_dim(pos) == full && cone_dim(neg) == full) {
        next.push_back(std::move(pos));
        next.push_back(std::move(neg));
      } else {
        next.push_back(c);
      }
    }
    cells = std::move(next);
  }
  return cells;
}

SupportFamily minimal_family(std::size_t n, const std::vector<std::uint32_t>& holding) {
  std::set<std::uint32_t> hs(holding.begin(), holding.end());
  SupportFamily fam;
  fam.n = n;
  for (std::uint32_t mask : holding) {
    bool minimal = true;
    for (std::size_t j = 0; j < n && minimal; ++j)
      if ((mask & (std::uint32_t{1} << j)) && hs.count(mask ^ (std::uint32_t{1} << j)))
        minimal = false;
    if (!minimal) continue;
    std::vector<std::size_t> idx;
    for (std::size_t j = 0; j < n; ++j)
      if (mask & (std::uint32_t{1} << j)) idx.push_back(j);
    fam.minimal.push_back(std::move(idx));
  }
  std::sort(fam.minimal.begin(), fam.minimal.end());
  return fam;
}

bool inside_boundary_of(const Cone& face, const Cone& outer) {
  for (const auto& g : outer.facets) {
    bool tight = true;
    for (const auto& r : face.rays)
      if (dot(g, r) != 0) { tight = false; break; }
    for (std::size_t i = 0; i < face.lineality.rows && tight; ++i)
      if (dot(g, face.lineality.row(i)) != 0) tight = false;
    if (tight) return true;
  }
  return false;
}

}  // namespace

ChamberComplex chamber_complex(const DegreeMatrix& d,
                               const std::optional<QVec>& designated_point) {
  ChamberComplex cc;
  cc.deg = d;
  cc.eff = effective_cone(d);
  std::vector<Cone> del;
  for (std::size_t i = 0; i < d.n; ++i) del.push_back(deletion_cone(d, i));
  cc.mov = del[0];
  for (std::size_t i = 1; i < d.n; ++i) cc.mov = intersect(cc.mov, del[i]);

  SubsetCones sc(d);
  const std::uint32_t fullmask = (std::uint32_t{1} << d.n) - 1;
  std::map<std::string, Chamber> grown;
  for (const Cone& cell : arrangement_cells(cc.eff, candidate_normals(d))) {
    ZVec sample = relint_point(cell);
    QVec qs = to_rational(sample);
    std::vector<std::uint32_t> holding;
    std::vector<ZVec> ineqs, eqs;
    for (std::uint32_t mask = 0; mask <= fullmask; ++mask) {
      if (!sc.member(mask, qs)) continue;
      holding.push_back(mask);
      const Cone& sub = sc.cone_of(mask);
      ineqs.insert(ineqs.end(), sub.facets.begin(), sub.facets.end());
      auto more = sub.span_normals.row_list();
      eqs.insert(eqs.end(), more.begin(), more.end());
    }
    Cone lam = cone_from_system(d.r, ineqs, eqs);
    if (!in_relative_interior(lam, qs))
      throw InternalInconsistency("cell sample fell out of its own chamber");
    SupportFamily fam = minimal_family(d.n, holding);
    auto it = grown.find(cone_key(lam));
    if (it != grown.end()) {
      if (it->second.supports != fam)
        throw InternalInconsistency("merged cells disagree on semistable supports");
      continue;
    }
    Chamber ch;
    ch.cone = std::move(lam);
    ch.sample = std::move(sample);
    ch.supports = std::move(fam);
    for (std::size_t i = 0; i < d.n; ++i)
      if (!subcone_of(ch.cone, del[i])) ch.exc.push_back(i);
    ch.in_mov = subcone_of(ch.cone, cc.mov);
    if (ch.in_mov != ch.exc.empty())
      throw InternalInconsistency("deletion cones disagree with the moving cone");
    grown.emplace(cone_key(ch.cone), std::move(ch));
  }

  for (auto& [key, ch] : grown) cc.chambers.push_back(std::move(ch));
  for (std::size_t i = 0; i < cc.chambers.size(); ++i)
    cc.chambers[i].id = "C" + std::to_string(i);

  bool any_mov = false;
  for (const auto& ch : cc.chambers) any_mov = any_mov || ch.in_mov;
  if (!any_mov) throw NoProjectiveModel("no chamber lies inside the moving cone");

  Fan tiling;
  tiling.dim = d.r;
  for (const auto& ch : cc.chambers) tiling.cones.push_back(ch.cone);
  FanReport rep = fan_validate(tiling);
  if (!rep.ok) throw InternalInconsistency("chambers do not form a fan: " + rep.detail);
  if (!support_covers(tiling.cones, cc.eff))
    throw InternalInconsistency("chambers do not tile the effective cone");
  std::vector<Cone> mov_pieces;
  for (const auto& ch : cc.chambers)
    if (ch.in_mov) mov_pieces.push_back(ch.cone);
  if (!support_covers(mov_pieces, cc.mov))
    throw InternalInconsistency("chambers inside the moving cone do not tile it");

  // facet -> incident chambers
  std::map<std::string, std::pair<Cone, std::vector<std::size_t>>> shared;
  for (std::size_t i = 0; i < cc.chambers.size(); ++i)
    for (Cone& f : facet_faces(cc.chambers[i].cone)) {
      auto& slot = shared[cone_key(f)];
      if (slot.second.empty()) slot.first = std::move(f);
      slot.second.push_back(i);
    }
  for (auto& [key, slot] : shared) {
    auto& [fc, owners] = slot;
    if (owners.size() > 2)
      throw InternalInconsistency("wall shared by more than two chambers");
    Wall w;
    w.cone = fc;
    if (inside_boundary_of(fc, cc.eff)) {
      if (owners.size() != 1)
        throw InternalInconsistency("wall on the boundary of Eff shared by two chambers");
      w.a = cc.chambers[owners[0]].id;
      w.kind = WallKind::Fiber;
    } else if (owners.size() == 1) {
      throw InternalInconsistency("interior wall missing its far chamber");
    } else {
      const Chamber& x = cc.chambers[owners[0]];
      const Chamber& y = cc.chambers[owners[1]];
      if (x.in_mov && y.in_mov) {
        w.kind = WallKind::Flip;
        w.a = std::min(x.id, y.id);
        w.b = std::max(x.id, y.id);
      } else {
        const Chamber& near = (x.exc.size() <= y.exc.size()) ? x : y;
        const Chamber& far = (&near == &x) ? y : x;
        w.kind = WallKind::Divisorial;
        w.a = near.id;
        w.b = far.id;
        std::set_difference(far.exc.begin(), far.exc.end(), near.exc.begin(),
                            near.exc.end(), std::back_inserter(w.new_exc));
      }
    }
    cc.walls.push_back(std::move(w));
  }
  std::sort(cc.walls.begin(), cc.walls.end(), [](const Wall& u, const Wall& v) {
    if (u.a != v.a) return u.a < v.a;
    if (u.b != v.b) return u.b < v.b;
    return cone_key(u.cone) < cone_key(v.cone);
  });

  if (designated_point) {
    if (designated_point->size() != d.r)
      throw DimensionMismatch("designated point length does not match the grading rank");
    for (const auto& ch : cc.chambers)
      if (ch.in_mov && in_relative_interior(ch.cone, *designated_point)) {
        cc.designated = ch.id;
        break;
      }
    if (cc.designated.empty())
      throw InvariantViolation(
          "designated point is not interior to any chamber inside the moving cone");
  } else {
    for (const auto& ch : cc.chambers)
      if (ch.in_mov) {
        cc.designated = ch.id;
        break;
      }
  }
  return cc;
}

const Chamber& chamber_by_id(const ChamberComplex& cc, const std::string& id) {
  for (const auto& ch : cc.chambers)
    if (ch.id == id) return ch;
  throw InvariantViolation("no chamber with id " + id);
}

Fan mov_fan(const ChamberComplex& cc) {
  Fan f;
  f.dim = cc.deg.r;
  for (const auto& ch : cc.chambers)
    if (ch.in_mov) f.cones.push_back(ch.cone);
  fan_fill_adjacency(f);
  return f;
}

WallClass classify_wall(const ChamberComplex& cc, const std::string& chamber_id,
                        const Cone& facet) {
  const Chamber& ch = chamber_by_id(cc, chamber_id);
  if (!ch.in_mov)
    throw InvariantViolation("wall classification needs a chamber inside the moving cone");
  if (cone_dim(facet) + 1 != cone_dim(ch.cone) || !is_face_of(facet, ch.cone))
    throw NotAFacet("the given cone is not a facet of chamber " + chamber_id);
  const std::string key = cone_key(facet);
  for (const Wall& w : cc.walls) {
    if (w.a != chamber_id && w.b != chamber_id) continue;
    if (cone_key(w.cone) != key) continue;
    WallClass out;
    out.kind = w.kind;
    out.target = (w.a == chamber_id) ? w.b : w.a;
    if (w.kind == WallKind::Divisorial) {
      if (w.new_exc.size() != 1)
        throw InternalInconsistency("divisorial wall gains " +
                                    std::to_string(w.new_exc.size()) +
                                    " exceptional indices instead of one");
      out.divisor_index = w.new_exc[0];
    }
    return out;
  }
  throw InternalInconsistency("facet of a chamber is missing from the wall table");
}

Location locate_class(const ChamberComplex& cc, const QVec& x) {
  if (x.size() != cc.deg.r)
    throw DimensionMismatch("class length does not match the grading rank");
  Location loc;
  if (!contains(cc.eff, x)) {
    loc.kind = Location::Kind::OutsideEff;
    return loc;
  }
  std::vector<const Chamber*> holders;
  for (const auto& ch : cc.chambers) {
    if (in_relative_interior(ch.cone, x)) {
      loc.kind = Location::Kind::Chamber;
      loc.chamber = ch.id;
      loc.face = ch.cone;
      loc.incident = {ch.id};
      return loc;
    }
    if (contains(ch.cone, x)) holders.push_back(&ch);
  }
  if (holders.empty())
    throw InternalInconsistency("effective class missed every chamber");
  loc.kind = Location::Kind::Face;
  bool first = true;
  for (const Chamber* ch : holders) {
    std::vector<ZVec> eqs = ch->cone.span_normals.row_list();
    for (const auto& g : ch->cone.facets)
      if (dot(g, x) == 0) eqs.push_back(g);
    Cone face = cone_from_system(cc.deg.r, ch->cone.facets, eqs);
    loc.face = first ? face : intersect(loc.face, face);
    first = false;
    loc.incident.push_back(ch->id);
  }
  return loc;
}

}  // namespace mdm
