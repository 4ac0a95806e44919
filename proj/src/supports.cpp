#include "mdm/supports.hpp"

#include <algorithm>

#include "mdm/errors.hpp"

namespace mdm {

namespace {
constexpr std::size_t kMaxGenerators = 22;  // 2^n subsets are enumerated

void check_size(const DegreeMatrix& d) {
  if (d.n > kMaxGenerators)
    throw BudgetExceeded("support enumeration over 2^" + std::to_string(d.n) +
                         " subsets is out of reach");
}
}  // namespace

SubsetCones::SubsetCones(const DegreeMatrix& d) : deg_(d) { check_size(d); }

const Cone& SubsetCones::cone_of(std::uint32_t mask) {
  auto it = cache_.find(mask);
  if (it != cache_.end()) return it->second;
  std::vector<ZVec> gens;
  for (std::size_t i = 0; i < deg_.n; ++i)
    if (mask & (std::uint32_t{1} << i)) gens.push_back(deg_.cols[i]);
  return cache_.emplace(mask, cone_from_generators(deg_.r, gens)).first->second;
}

bool SubsetCones::member(std::uint32_t mask, const QVec& chi) {
  return contains(cone_of(mask), chi);
}

SupportFamily semistable_supports(SubsetCones& sc, const QVec& chi) {
  const std::size_t n = sc.degrees().n;
  if (chi.size() != sc.degrees().r)
    throw DimensionMismatch("character length does not match the grading rank");
  const std::uint32_t full = (n == 32) ? ~std::uint32_t{0} : ((std::uint32_t{1} << n) - 1);
  std::vector<char> ss(std::size_t{1} << n, 0);
  SupportFamily fam;
  fam.n = n;
  // Numeric order visits every subset before its supersets; semistability is
  // upward closed, so a mask with a semistable sub-mask needs no cone test.
  for (std::uint32_t mask = 0; mask <= full; ++mask) {
    bool inherited = false;
    for (std::size_t j = 0; j < n && !inherited; ++j)
      if ((mask & (std::uint32_t{1} << j)) && ss[mask ^ (std::uint32_t{1} << j)])
        inherited = true;
    if (inherited) {
      ss[mask] = 1;
    } else if (sc.member(mask, chi)) {
      ss[mask] = 1;
      std::vector<std::size_t> idx;
      for (std::size_t j = 0; j < n; ++j)
        if (mask & (std::uint32_t{1} << j)) idx.push_back(j);
      fam.minimal.push_back(std::move(idx));
    }
    if (mask == full) break;
  }
  std::sort(fam.minimal.begin(), fam.minimal.end());
  return fam;
}

SupportFamily semistable_supports(const DegreeMatrix& d, const QVec& chi) {
  SubsetCones sc(d);
  return semistable_supports(sc, chi);
}

bool family_refines(const SupportFamily& fine, const SupportFamily& coarse) {
  for (const auto& f : fine.minimal) {
    bool held = false;
    for (const auto& c : coarse.minimal) {
      bool sub = std::includes(f.begin(), f.end(), c.begin(), c.end());
      if (sub) {
        held = true;
        break;
      }
    }
    if (!held) return false;
  }
  return true;
}

}  // namespace mdm
