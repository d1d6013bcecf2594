#include "zlat/spectra.hpp"

namespace zlat {

element_set maximal_elements(const mult_lattice& ml) {
  if (ml.size() == 1)
    throw error(errc::trivial_lattice, "the one-point structure has no proper elements");
  return ml.spectra().maximal;
}

element_set primes(const mult_lattice& ml) { return ml.spectra().primes; }

element_set closed_set_VP(const mult_lattice& ml, element_id a) {
  if (a >= ml.size()) throw error(errc::foreign_element, "element outside the universe", {a});
  return ml.spectra().primes & ml.lattice().up_set(a);
}

element_set minimal_primes_over(const mult_lattice& ml, element_id a) {
  return ml.lattice().minimal_members(closed_set_VP(ml, a));
}

element_id radical(const mult_lattice& ml, element_id x) {
  if (x >= ml.size()) throw error(errc::foreign_element, "element outside the universe", {x});
  const finite_lattice& lat = ml.lattice();
  const spectra_cache& sp = ml.spectra();

  element_set nilpotent_into_x;
  for (element_id y = 0; y < ml.size(); ++y)
    if (lat.leq(sp.stable_power[y], x)) nilpotent_into_x.insert(y);
  element_id by_powers = lat.join_of(nilpotent_into_x);

  element_set over = sp.primes & lat.up_set(x);
  element_id by_primes = lat.meet_of(over);
  element_id by_minimal = lat.meet_of(lat.minimal_members(over));

  if (by_powers != by_primes || by_primes != by_minimal)
    throw error(errc::radical_formula_mismatch,
                "radical formulas disagree at " + lat.label(x), {x, by_powers, by_primes, by_minimal});
  return by_primes;
}

element_id jacobson_radical(const mult_lattice& ml) {
  if (ml.size() == 1)
    throw error(errc::trivial_lattice, "the one-point structure has no proper elements");
  return ml.spectra().jacobson;
}

classification_record classify_element(const mult_lattice& ml, element_id x) {
  if (x >= ml.size()) throw error(errc::foreign_element, "element outside the universe", {x});
  const finite_lattice& lat = ml.lattice();
  const spectra_cache& sp = ml.spectra();
  unsigned n = ml.size();

  classification_record r;
  r.element = x;
  r.proper = x != lat.top();
  r.complemented = !lat.complements_of(x).empty();
  r.idempotent = ml.mul(x, x) == x;
  r.radical = radical(ml, x);
  r.radical_element = r.radical == x;
  if (!r.proper) return r;

  r.maximal = sp.maximal.contains(x);
  r.prime = sp.primes.contains(x);

  r.semiprime = true;
  for (element_id a = 0; a < n && r.semiprime; ++a)
    if (lat.leq(ml.mul(a, a), x) && !lat.leq(a, x)) r.semiprime = false;

  r.primary = true;
  for (element_id a = 0; a < n && r.primary; ++a)
    for (element_id b = 0; b < n; ++b)
      if (lat.leq(ml.mul(a, b), x) && !lat.leq(a, x) && !lat.leq(sp.stable_power[b], x)) {
        r.primary = false;
        break;
      }

  r.irreducible = true;
  for (element_id a = 0; a < n && r.irreducible; ++a)
    for (element_id b = 0; b < n; ++b)
      if (lat.meet(a, b) == x && a != x && b != x) { r.irreducible = false; break; }

  r.strongly_irreducible = true;
  for (element_id a = 0; a < n && r.strongly_irreducible; ++a)
    for (element_id b = 0; b < n; ++b)
      if (lat.leq(lat.meet(a, b), x) && !lat.leq(a, x) && !lat.leq(b, x)) {
        r.strongly_irreducible = false;
        break;
      }
  return r;
}

lattice_predicates_record lattice_predicates(const mult_lattice& ml) {
  const finite_lattice& lat = ml.lattice();
  const spectra_cache& sp = ml.spectra();
  lattice_predicates_record r;
  r.maximal_count = sp.maximal.count();
  r.semisimple = sp.jacobson == lat.bottom();
  r.frame = is_frame(ml);
  r.regular = true;
  for (element_id x = 0; x < ml.size(); ++x)
    if (lat.complements_of(x).empty()) { r.regular = false; break; }
  return r;
}

} // namespace zlat
