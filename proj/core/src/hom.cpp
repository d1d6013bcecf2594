#include "zlat/hom.hpp"

namespace zlat {

hom_report check_homomorphism(const finite_lattice& src, const finite_lattice& dst,
                              std::span<const element_id> map) {
  if (map.size() != src.size())
    throw error(errc::shape_mismatch, "map size does not match the source universe");
  for (element_id v : map)
    if (v >= dst.size())
      throw error(errc::foreign_element, "image outside the target universe", {v});

  hom_report r;
  unsigned n = src.size();
  for (element_id a = 0; a < n; ++a)
    for (element_id b = 0; b < n; ++b) {
      if (r.leq.holds && src.leq(a, b) && !dst.leq(map[a], map[b]))
        r.leq = {false, std::pair{a, b}};
      if (r.join.holds && map[src.join(a, b)] != dst.join(map[a], map[b]))
        r.join = {false, std::pair{a, b}};
      if (r.meet.holds && map[src.meet(a, b)] != dst.meet(map[a], map[b]))
        r.meet = {false, std::pair{a, b}};
    }
  return r;
}

hom_report check_homomorphism(const mult_lattice& src, const mult_lattice& dst,
                              std::span<const element_id> map, bool strict_mult) {
  hom_report r = check_homomorphism(src.lattice(), dst.lattice(), map);
  if (strict_mult) {
    hom_law_report m;
    for (element_id a = 0; a < src.size() && m.holds; ++a)
      for (element_id b = a; b < src.size(); ++b)
        if (map[src.mul(a, b)] != dst.mul(map[a], map[b])) {
          m = {false, std::pair{a, b}};
          break;
        }
    r.mult = m;
  }
  return r;
}

} // namespace zlat
