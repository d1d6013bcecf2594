#include "zlat/search.hpp"

#include "zlat/fixtures.hpp"
#include "zlat/ztheory.hpp"

namespace zlat {
namespace {

// Meets of subsets of the maximal elements, computed directly from the order
// so the comparison with the pair-form z-set does not go through the cache's
// little_m route.
element_set meets_of_maximal_subsets(const mult_lattice& ml) {
  const finite_lattice& lat = ml.lattice();
  std::vector<element_id> maxima = lat.lower_covers(lat.top()).to_vector();
  element_set out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << maxima.size()); ++mask) {
    element_set subset;
    for (std::size_t i = 0; i < maxima.size(); ++i)
      if (mask >> i & 1) subset.insert(maxima[i]);
    out.insert(lat.meet_of(subset));
  }
  return out;
}

struct hit {
  std::vector<element_id> witness;
  std::string detail;
};

std::optional<hit> probe(property_id property, const mult_lattice& ml) {
  const spectra_cache& sp = ml.spectra();
  element_set z = sp.z_set;
  switch (property) {
    case property_id::zproduct_not_closed:
      for (element_id a : z)
        for (element_id b : z) {
          element_id p = ml.mul(a, b);
          if (!z.contains(p))
            return hit{{a, b}, "z-elements " + ml.label(a) + " and " + ml.label(b) +
                                   " multiply to " + ml.label(p) + ", not a z-element"};
        }
      return std::nullopt;
    case property_id::zjoin_not_closed:
      for (element_id a : z)
        for (element_id b : z) {
          element_id j = ml.join(a, b);
          if (!z.contains(j))
            return hit{{a, b}, "z-elements " + ml.label(a) + " and " + ml.label(b) +
                                   " join to " + ml.label(j) + ", not a z-element"};
        }
      return std::nullopt;
    case property_id::prime_not_z:
      for (element_id p : sp.primes)
        if (!z.contains(p))
          return hit{{p}, "prime " + ml.label(p) + " is not a z-element"};
      return std::nullopt;
    case property_id::zprime_not_prime_nonszi: {
      if (lattice_z_predicates(ml).szi) return std::nullopt;
      for (element_id x : z)
        if (z_classify(ml, x).z_prime && !sp.primes.contains(x))
          return hit{{x}, "non-szi structure with z-prime " + ml.label(x) + " not prime"};
      return std::nullopt;
    }
    case property_id::zero_z_not_semisimple:
      if (z.contains(ml.bottom()) && sp.jacobson != ml.bottom())
        return hit{{ml.bottom()},
                   "the bottom is a z-element yet the jacobson radical is " +
                       ml.label(sp.jacobson)};
      return std::nullopt;
    case property_id::cz_neq_ma:
      for (element_id a = 0; a < ml.size(); ++a)
        if (sp.cz[a] != sp.little_m[a])
          return hit{{a}, "closure and m-image differ at " + ml.label(a)};
      return std::nullopt;
    case property_id::strongz_neq_z: {
      element_set strong = meets_of_maximal_subsets(ml);
      element_set diff = (strong - z) | (z - strong);
      if (!diff.empty()) {
        element_id x = diff.first();
        std::string side = strong.contains(x) ? "a meet of maximal elements but not z"
                                              : "z but not a meet of maximal elements";
        return hit{{x}, ml.label(x) + " is " + side};
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

struct stop_stream {};

} // namespace

property_id property_from_code(std::string_view code) {
  if (code == "ZPRODUCT-NOT-CLOSED") return property_id::zproduct_not_closed;
  if (code == "ZJOIN-NOT-CLOSED") return property_id::zjoin_not_closed;
  if (code == "PRIME-NOT-Z") return property_id::prime_not_z;
  if (code == "ZPRIME-NOT-PRIME-NONSZI") return property_id::zprime_not_prime_nonszi;
  if (code == "ZERO-Z-NOT-SEMISIMPLE") return property_id::zero_z_not_semisimple;
  if (code == "CZ-NEQ-MA") return property_id::cz_neq_ma;
  if (code == "STRONGZ-NEQ-Z") return property_id::strongz_neq_z;
  throw error(errc::unknown_property, "unknown search property: " + std::string(code));
}

std::string_view property_code(property_id p) {
  switch (p) {
    case property_id::zproduct_not_closed: return "ZPRODUCT-NOT-CLOSED";
    case property_id::zjoin_not_closed: return "ZJOIN-NOT-CLOSED";
    case property_id::prime_not_z: return "PRIME-NOT-Z";
    case property_id::zprime_not_prime_nonszi: return "ZPRIME-NOT-PRIME-NONSZI";
    case property_id::zero_z_not_semisimple: return "ZERO-Z-NOT-SEMISIMPLE";
    case property_id::cz_neq_ma: return "CZ-NEQ-MA";
    case property_id::strongz_neq_z: return "STRONGZ-NEQ-Z";
  }
  return "?";
}

search_result search_counterexample(property_id property, const corpus_spec& spec) {
  search_result r;
  r.property = property;
  auto visit = [&](const mult_lattice& ml) {
    ++r.structures_searched;
    if (auto h = probe(property, ml)) {
      r.found = true;
      r.structure = ml;
      r.witness = std::move(h->witness);
      r.detail = h->detail + " (structure " + std::string(ml.name()) + ")";
      throw stop_stream{};
    }
  };
  try {
    if (spec.mode != mult_mode::fixtures_only)
      for (std::string_view name : fixture_names()) {
        mult_lattice ml = fixture_by_name(name);
        if (ml.size() <= spec.max_n) visit(ml);
      }
    enumerate_corpus(spec, visit);
  } catch (const stop_stream&) {
    return r;
  }
  r.detail = "exhausted " + std::to_string(r.structures_searched) +
             " structures with universes up to " + std::to_string(spec.max_n) +
             " elements; a statement about the searched range only";
  return r;
}

bool recheck_counterexample(property_id property, const mult_lattice& ml,
                            std::span<const element_id> witness) {
  for (element_id w : witness)
    if (w >= ml.size()) return false;
  const spectra_cache& sp = ml.spectra();
  element_set z = sp.z_set;
  switch (property) {
    case property_id::zproduct_not_closed:
      return witness.size() == 2 && z.contains(witness[0]) && z.contains(witness[1]) &&
             !z.contains(ml.mul(witness[0], witness[1]));
    case property_id::zjoin_not_closed:
      return witness.size() == 2 && z.contains(witness[0]) && z.contains(witness[1]) &&
             !z.contains(ml.join(witness[0], witness[1]));
    case property_id::prime_not_z:
      return witness.size() == 1 && sp.primes.contains(witness[0]) && !z.contains(witness[0]);
    case property_id::zprime_not_prime_nonszi:
      return witness.size() == 1 && !lattice_z_predicates(ml).szi &&
             z_classify(ml, witness[0]).z_prime && !sp.primes.contains(witness[0]);
    case property_id::zero_z_not_semisimple:
      return z.contains(ml.bottom()) && sp.jacobson != ml.bottom();
    case property_id::cz_neq_ma:
      return witness.size() == 1 && sp.cz[witness[0]] != sp.little_m[witness[0]];
    case property_id::strongz_neq_z: {
      if (witness.size() != 1) return false;
      element_set strong = meets_of_maximal_subsets(ml);
      return strong.contains(witness[0]) != z.contains(witness[0]);
    }
  }
  return false;
}

} // namespace zlat
