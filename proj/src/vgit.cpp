#include "mdm/vgit.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "mdm/errors.hpp"
#include "mdm/linalg.hpp"

namespace mdm {

Cone weight_cone(const DegreeMatrix& d) { return effective_cone(d); }

bool git_equivalent(const DegreeMatrix& d, const QVec& chi1, const QVec& chi2) {
  return semistable_supports(d, chi1) == semistable_supports(d, chi2);
}

StabilityReport stability_report(const DegreeMatrix& d, const QVec& chi) {
  SupportFamily fam = semistable_supports(d, chi);
  StabilityReport rep;
  rep.weight_cone_member = contains(effective_cone(d), chi);

  // Empty family: the semistable locus is empty and the two loci agree
  // vacuously. The trivial character fails below through the empty support.
  rep.ss_equals_s = true;
  for (const auto& supp : fam.minimal) {
    std::vector<ZVec> gens;
    gens.reserve(supp.size());
    for (std::size_t i : supp) gens.push_back(d.cols[i]);
    Cone c = cone_from_generators(d.r, gens);
    if (cone_dim(c) != d.r || !in_relative_interior(c, chi)) {
      rep.ss_equals_s = false;
      break;
    }
  }

  std::vector<std::uint32_t> mins;
  mins.reserve(fam.minimal.size());
  for (const auto& supp : fam.minimal) {
    std::uint32_t m = 0;
    for (std::size_t i : supp) m |= std::uint32_t{1} << i;
    mins.push_back(m);
  }
  bool any_unstable = false;
  std::size_t largest = 0;
  const std::uint32_t full = (std::uint32_t{1} << d.n) - 1;
  for (std::uint32_t s = 0; s <= full; ++s) {
    bool semis = false;
    for (std::uint32_t m : mins)
      if ((s & m) == m) {
        semis = true;
        break;
      }
    if (!semis) {
      any_unstable = true;
      largest = std::max<std::size_t>(largest, std::popcount(s));
    }
  }
  if (any_unstable) rep.unstable_codim = d.n - largest;

  // Minimal supports have at most r elements, so full rank means exactly r
  // generators and the lattice index is the Hermite pivot product.
  for (const auto& supp : fam.minimal) {
    if (supp.size() < d.r) continue;
    std::vector<ZVec> rows;
    rows.reserve(supp.size());
    for (std::size_t i : supp) rows.push_back(d.cols[i]);
    IntMatrix m = IntMatrix::from_rows(rows, d.r);
    if (rank(m) != d.r) continue;
    IntMatrix h = hermite_normal_form(m).h;
    Int idx = 1;
    for (std::size_t k = 0; k < d.r; ++k) idx *= h.at(k, k);
    rep.isotropy_order =
        rep.isotropy_order ? lcm(*rep.isotropy_order, idx) : idx;
  }
  return rep;
}

namespace {
QVec second_interior_point(const Cone& c) {
  QVec p = to_rational(relint_point(c));
  ZVec shift;
  if (!c.rays.empty())
    shift = c.rays.front();
  else if (c.lineality.rows > 0)
    shift = c.lineality.row(0);
  else
    return p;
  for (std::size_t i = 0; i < p.size(); ++i) p[i] += Rat(shift[i]);
  return p;
}
}  // namespace

ChamberComplex git_chambers(const DegreeMatrix& d) {
  ChamberComplex cc = chamber_complex(d);
  SubsetCones sc(d);
  for (const auto& ch : cc.chambers) {
    if (cone_dim(ch.cone) != d.r)
      throw InternalInconsistency("chamber " + ch.id + " is not full dimensional");
    if (semistable_supports(sc, to_rational(relint_point(ch.cone))) != ch.supports ||
        semistable_supports(sc, second_interior_point(ch.cone)) != ch.supports)
      throw InternalInconsistency("support family varies inside chamber " + ch.id);
  }
  for (const auto& w : cc.walls) {
    SupportFamily face = semistable_supports(sc, to_rational(relint_point(w.cone)));
    const Chamber& a = chamber_by_id(cc, w.a);
    if (!family_refines(a.supports, face))
      throw InternalInconsistency(
          "semistable locus does not shrink from the wall into chamber " + w.a);
    if (!w.b.empty()) {
      const Chamber& b = chamber_by_id(cc, w.b);
      if (!family_refines(b.supports, face))
        throw InternalInconsistency(
            "semistable locus does not shrink from the wall into chamber " + w.b);
    }
  }
  return cc;
}

}  // namespace mdm
