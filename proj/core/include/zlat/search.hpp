#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zlat/enumerate.hpp"

namespace zlat {

// Each property names a potential counterexample shape. A search walks the
// named fixtures (those within max_n) and then the enumerated corpus, in
// deterministic order, and stops at the first witness. "Exhausted" is always
// a bounded statement about the searched range, never a theorem.
enum class property_id {
  zproduct_not_closed,    // z-elements a, b with a*b not a z-element
  zjoin_not_closed,       // z-elements a, b with a \/ b not a z-element
  prime_not_z,            // a prime that is not a z-element
  zprime_not_prime_nonszi,// non-szi structure with a z-prime that is not prime
  zero_z_not_semisimple,  // bottom a z-element while the Jacobson radical is not bottom
  cz_neq_ma,              // an element with cz(a) != m_a
  strongz_neq_z,          // an element where "meet of some maximal elements" and the pair form disagree
};

property_id property_from_code(std::string_view code); // unknown_property
std::string_view property_code(property_id p);

struct search_result {
  property_id property;
  bool found = false;
  std::optional<mult_lattice> structure;
  std::vector<element_id> witness;
  std::string detail;
  unsigned long structures_searched = 0;
};

search_result search_counterexample(property_id property, const corpus_spec& spec);

// True when the witness still violates the property on the given structure;
// used to re-check findings in isolation.
bool recheck_counterexample(property_id property, const mult_lattice& ml,
                            std::span<const element_id> witness);

} // namespace zlat
