#pragma once

#include <optional>
#include <span>
#include <utility>

#include "zlat/lattice.hpp"
#include "zlat/quantale.hpp"

namespace zlat {

struct hom_law_report {
  bool holds = true;
  // First violating pair, in source coordinates.
  std::optional<std::pair<element_id, element_id>> witness;
};

// A map is a homomorphism here when it preserves the order, binary joins and
// binary meets. Preservation of bottom, top or multiplication is NOT part of
// the definition; multiplication preservation can be requested and is always
// reported separately, never folded into ok().
struct hom_report {
  hom_law_report leq;
  hom_law_report join;
  hom_law_report meet;
  std::optional<hom_law_report> mult; // present only when strict_mult was requested
  bool ok() const { return leq.holds && join.holds && meet.holds; }
  bool ok_strict() const { return ok() && (!mult || mult->holds); }
};

// shape_mismatch when map.size() != src.size(); foreign_element when an image
// falls outside the target universe.
hom_report check_homomorphism(const finite_lattice& src, const finite_lattice& dst,
                              std::span<const element_id> map);
hom_report check_homomorphism(const mult_lattice& src, const mult_lattice& dst,
                              std::span<const element_id> map, bool strict_mult);

} // namespace zlat
