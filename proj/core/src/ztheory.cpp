#include "zlat/ztheory.hpp"

#include <algorithm>

namespace zlat {

std::pair<element_set, element_id> maximal_cover(const mult_lattice& ml, element_id a) {
  if (a >= ml.size()) throw error(errc::foreign_element, "element outside the universe", {a});
  const spectra_cache& sp = ml.spectra();
  return {sp.big_m[a], sp.little_m[a]};
}

bool is_z_element(const mult_lattice& ml, element_id x) {
  if (x >= ml.size()) throw error(errc::foreign_element, "element outside the universe", {x});
  return ml.spectra().z_set.contains(x);
}

element_set z_elements(const mult_lattice& ml) { return ml.spectra().z_set; }

element_id z_closure(const mult_lattice& ml, element_id a) {
  if (a >= ml.size()) throw error(errc::foreign_element, "element outside the universe", {a});
  return ml.spectra().cz[a];
}

z_profile z_classify(const mult_lattice& ml, element_id x) {
  if (x >= ml.size()) throw error(errc::foreign_element, "element outside the universe", {x});
  const finite_lattice& lat = ml.lattice();
  const spectra_cache& sp = ml.spectra();
  element_set zs = sp.z_set;

  z_profile p;
  p.element = x;
  p.big_m = sp.big_m[x];
  p.little_m = sp.little_m[x];
  p.cz = sp.cz[x];
  p.is_z = zs.contains(x);
  p.strong_z = sp.little_m[x] == x;
  for (element_id a = 0; a < ml.size() && !p.basic_z; ++a)
    if (sp.little_m[a] == x) p.basic_z = true;

  if (!p.is_z || x == lat.top()) return p;

  p.z_prime = p.z_semiprime = p.z_primary = p.z_irreducible = p.z_strongly_irreducible = true;
  for (element_id a : zs) {
    if (lat.leq(ml.mul(a, a), x) && !lat.leq(a, x)) p.z_semiprime = false;
    for (element_id b : zs) {
      if (lat.leq(ml.mul(a, b), x) && !lat.leq(a, x) && !lat.leq(b, x)) p.z_prime = false;
      if (lat.leq(ml.mul(a, b), x) && !lat.leq(a, x) && !lat.leq(sp.stable_power[b], x))
        p.z_primary = false;
      if (lat.meet(a, b) == x && a != x && b != x) p.z_irreducible = false;
      if (lat.leq(lat.meet(a, b), x) && !lat.leq(a, x) && !lat.leq(b, x))
        p.z_strongly_irreducible = false;
    }
  }
  return p;
}

z_predicates_record lattice_z_predicates(const mult_lattice& ml) {
  const spectra_cache& sp = ml.spectra();
  const finite_lattice& lat = ml.lattice();
  z_predicates_record r;

  r.szi = true;
  for (element_id a = 0; a < ml.size(); ++a) {
    element_id b = sp.little_m[a];
    if (ml.mul(b, b) != b) { r.szi = false; break; }
  }
  r.pz = sp.primes.subset_of(sp.z_set);
  r.z_join_closed = true;
  for (element_id a : sp.z_set)
    for (element_id b : sp.z_set)
      if (!sp.z_set.contains(lat.join(a, b))) { r.z_join_closed = false; break; }
  return r;
}

element_set z_primes(const mult_lattice& ml) {
  element_set out;
  for (element_id x : ml.spectra().z_set)
    if (z_classify(ml, x).z_prime) out.insert(x);
  return out;
}

element_set z_irreducibles(const mult_lattice& ml) {
  element_set out;
  for (element_id x : ml.spectra().z_set)
    if (z_classify(ml, x).z_irreducible) out.insert(x);
  return out;
}

element_set minimal_z_primes(const mult_lattice& ml) {
  if (ml.size() == 1)
    throw error(errc::trivial_lattice, "the one-point structure has no proper elements");
  return ml.lattice().minimal_members(z_primes(ml));
}

element_set closed_set_Vz(const mult_lattice& ml, element_id p) {
  if (p >= ml.size()) throw error(errc::foreign_element, "element outside the universe", {p});
  return z_primes(ml) & ml.lattice().up_set(p);
}

std::vector<element_id> z_irreducible_decomposition(const mult_lattice& ml, element_id x) {
  if (x >= ml.size()) throw error(errc::foreign_element, "element outside the universe", {x});
  const finite_lattice& lat = ml.lattice();
  if (!ml.spectra().z_set.contains(x))
    throw error(errc::not_z_element, lat.label(x) + " is not a z-element", {x});
  if (x == lat.top()) return {}; // the empty meet

  std::vector<element_id> cand = (z_irreducibles(ml) & lat.up_set(x)).to_vector();
  // Smallest subset with meet exactly x; candidates ascend, so scanning
  // combinations of each size in lexicographic order fixes the tie-break.
  // Minimality makes the result irredundant: dropping a member of a smallest
  // witness would yield a smaller one.
  for (unsigned k = 1; k <= cand.size(); ++k) {
    std::vector<unsigned> idx(k);
    for (unsigned i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
      element_id m = lat.top();
      for (unsigned i : idx) m = lat.meet(m, cand[i]);
      if (m == x) {
        std::vector<element_id> out;
        for (unsigned i : idx) out.push_back(cand[i]);
        return out;
      }
      // next combination
      unsigned i = k;
      while (i > 0 && idx[i - 1] == cand.size() - k + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (unsigned j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  throw error(errc::not_z_element,
              "no meet of z-irreducible elements reaches " + lat.label(x), {x});
}

quotient_frame z_quotient(const mult_lattice& ml) {
  const finite_lattice& lat = ml.lattice();
  const spectra_cache& sp = ml.spectra();
  unsigned n = ml.size();

  std::vector<element_id> carrier_of = sp.z_set.to_vector();
  unsigned k = static_cast<unsigned>(carrier_of.size());
  std::vector<element_id> index_of(n, k);
  for (unsigned i = 0; i < k; ++i) index_of[carrier_of[i]] = i;

  for (element_id a : sp.z_set)
    for (element_id b : sp.z_set)
      if (!sp.z_set.contains(lat.meet(a, b)))
        throw error(errc::quotient_law_violation,
                    "meet of z-elements " + lat.label(a) + ", " + lat.label(b) +
                        " left the carrier",
                    {a, b});

  std::vector<element_id> odot(std::size_t{k} * k), vee(std::size_t{k} * k);
  for (unsigned i = 0; i < k; ++i)
    for (unsigned j = 0; j < k; ++j) {
      odot[i * k + j] = index_of[sp.cz[ml.mul(carrier_of[i], carrier_of[j])]];
      vee[i * k + j] = index_of[sp.cz[lat.join(carrier_of[i], carrier_of[j])]];
    }
  std::vector<element_id> projection(n);
  for (element_id x = 0; x < n; ++x) projection[x] = index_of[sp.cz[x]];

  std::vector<std::pair<unsigned, unsigned>> pairs;
  for (unsigned i = 0; i < k; ++i)
    for (unsigned j = 0; j < k; ++j)
      if (lat.leq(carrier_of[i], carrier_of[j])) pairs.push_back({i, j});
  std::vector<std::string> labels;
  for (element_id e : carrier_of) labels.push_back(lat.label(e));

  mult_lattice structure = [&] {
    try {
      finite_lattice qlat = validate_lattice(k, pairs, std::move(labels));
      return validate_quantale(std::move(qlat), mult_table(k, std::vector<element_id>(odot)),
                               ml.name().empty() ? std::string("z-quotient")
                                                 : "z-quotient of " + ml.name());
    } catch (const error& e) {
      throw error(errc::quotient_law_violation,
                  std::string("the carrier does not close into a multiplicative lattice: ") +
                      e.what(),
                  e.witness());
    }
  }();
  // The carrier's join must be the closure of the ambient join, and its meet
  // the ambient meet.
  const finite_lattice& qlat = structure.lattice();
  for (unsigned i = 0; i < k; ++i)
    for (unsigned j = 0; j < k; ++j) {
      if (qlat.join(i, j) != vee[i * k + j])
        throw error(errc::quotient_law_violation,
                    "carrier join disagrees with the closed ambient join",
                    {carrier_of[i], carrier_of[j]});
      if (carrier_of[qlat.meet(i, j)] != lat.meet(carrier_of[i], carrier_of[j]))
        throw error(errc::quotient_law_violation,
                    "carrier meet disagrees with the ambient meet",
                    {carrier_of[i], carrier_of[j]});
    }

  // Closure must be a surjection onto the carrier fixing it pointwise.
  for (unsigned i = 0; i < k; ++i)
    if (projection[carrier_of[i]] != i)
      throw error(errc::quotient_law_violation, "closure moved a carrier element",
                  {carrier_of[i]});

  return quotient_frame{sp.z_set,       std::move(odot),      std::move(vee),
                        std::move(projection), std::move(structure), std::move(carrier_of),
                        std::move(index_of)};
}

} // namespace zlat
