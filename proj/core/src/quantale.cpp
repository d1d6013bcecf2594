#include "zlat/quantale.hpp"

#include <mutex>
#include <stdexcept>

namespace zlat {

mult_table mult_table::meet_table(const finite_lattice& lat) {
  unsigned n = lat.size();
  mult_table t(n, 0);
  for (element_id a = 0; a < n; ++a)
    for (element_id b = a; b < n; ++b) t.set(a, b, lat.meet(a, b));
  return t;
}

struct mult_lattice::cache_box {
  std::once_flag once;
  spectra_cache data;
};

mult_lattice::mult_lattice(finite_lattice lat, mult_table mul, std::string name)
    : lat_(std::move(lat)), mul_(std::move(mul)), name_(std::move(name)),
      cache_(std::make_shared<cache_box>()) {}

mult_lattice mult_lattice::unchecked(finite_lattice lat, mult_table mul, std::string name) {
  if (mul.size() != lat.size() || mul.cells().size() != std::size_t{lat.size()} * lat.size())
    throw error(errc::shape_mismatch, "multiplication table size does not match the lattice");
  for (element_id v : mul.cells())
    if (v >= lat.size())
      throw error(errc::foreign_element, "multiplication cell outside the universe", {v});
  return mult_lattice(std::move(lat), std::move(mul), std::move(name));
}

element_id mult_lattice::power(element_id a, unsigned k) const {
  if (k == 0) throw error(errc::zero_exponent, "powers start at the first", {a});
  element_id cur = a;
  for (unsigned i = 1; i < k; ++i) {
    element_id nxt = mul(cur, a);
    if (nxt == cur) return cur; // cur*a = cur forces cur*a^j = cur for all later j
    cur = nxt;
  }
  return cur;
}

element_id mult_lattice::residual(element_id a, element_id b) const {
  element_set ok;
  for (element_id l = 0; l < size(); ++l)
    if (leq(mul(l, b), a)) ok.insert(l);
  return lat_.join_of(ok);
}

element_id mult_lattice::annihilator(element_id b) const { return residual(bottom(), b); }

namespace {

// x is a z-element when comparisons that the maximal elements cannot separate
// are never separated by x: M_a >= M_b and b <= x force a <= x.
bool z_by_pairs(const finite_lattice& lat, const std::vector<element_set>& big_m, element_id x) {
  unsigned n = lat.size();
  for (element_id b = 0; b < n; ++b) {
    if (!lat.leq(b, x)) continue;
    for (element_id a = 0; a < n; ++a)
      if (big_m[b].subset_of(big_m[a]) && !lat.leq(a, x)) return false;
  }
  return true;
}

spectra_cache compute_spectra(const mult_lattice& ml) {
  const finite_lattice& lat = ml.lattice();
  unsigned n = lat.size();
  spectra_cache c;

  c.maximal = lat.lower_covers(lat.top());
  c.jacobson = lat.meet_of(c.maximal);

  c.big_m.resize(n);
  c.little_m.resize(n);
  for (element_id a = 0; a < n; ++a) {
    c.big_m[a] = lat.up_set(a) & c.maximal;
    c.little_m[a] = lat.meet_of(c.big_m[a]);
  }

  element_set z_equal, z_pairs;
  for (element_id x = 0; x < n; ++x) {
    if (c.little_m[x] == x) z_equal.insert(x);
    if (z_by_pairs(lat, c.big_m, x)) z_pairs.insert(x);
  }
  if (!(z_equal == z_pairs))
    throw error(errc::definition_disagreement,
                "fixed points of m and the pairwise characterization disagree",
                (z_equal - z_pairs | (z_pairs - z_equal)).to_vector());

  // Least z-element above each a. The set of z-elements is closed under meets
  // (m of a meet is the meet of the m's), so the meet of those above a is
  // itself one of them; anything else is a defect.
  c.cz.resize(n);
  for (element_id a = 0; a < n; ++a) {
    element_id v = lat.meet_of(lat.up_set(a) & z_equal);
    if (!z_equal.contains(v) || !lat.leq(a, v))
      throw error(errc::definition_disagreement, "z-elements are not meet-closed", {a, v});
    c.cz[a] = v;
  }
  for (element_id x = 0; x < n; ++x)
    if ((c.cz[x] == x) != z_equal.contains(x))
      throw error(errc::definition_disagreement,
                  "closure fixed points disagree with the m fixed points", {x});
  c.z_set = z_equal;

  for (element_id p = 0; p < n; ++p) {
    if (p == lat.top()) continue;
    bool prime = true;
    for (element_id x = 0; x < n && prime; ++x)
      for (element_id y = x; y < n; ++y)
        if (lat.leq(ml.mul(x, y), p) && !lat.leq(x, p) && !lat.leq(y, p)) { prime = false; break; }
    if (prime) c.primes.insert(p);
  }

  c.stable_power.resize(n);
  for (element_id a = 0; a < n; ++a) {
    element_id cur = a;
    for (unsigned guard = 0; guard < 2 * n + 2; ++guard) {
      element_id nxt = ml.mul(cur, a);
      if (nxt == cur) break;
      cur = nxt;
    }
    c.stable_power[a] = cur;
  }
  return c;
}

} // namespace

const spectra_cache& mult_lattice::spectra() const {
  std::call_once(cache_->once, [this] { cache_->data = compute_spectra(*this); });
  return cache_->data;
}

mult_lattice validate_quantale(finite_lattice lat, mult_table mul, std::string name) {
  unsigned n = lat.size();
  if (mul.size() != n || mul.cells().size() != std::size_t{n} * n)
    throw error(errc::shape_mismatch, "multiplication table size does not match the lattice");
  for (element_id v : mul.cells())
    if (v >= n) throw error(errc::foreign_element, "multiplication cell outside the universe", {v});

  const element_id top = lat.top(), bottom = lat.bottom();
  for (element_id a = 0; a < n; ++a)
    for (element_id b = a + 1; b < n; ++b)
      if (mul.at(a, b) != mul.at(b, a))
        throw error(errc::not_commutative,
                    lat.label(a) + "*" + lat.label(b) + " differs from " + lat.label(b) + "*" +
                        lat.label(a),
                    {a, b});
  for (element_id x = 0; x < n; ++x)
    if (mul.at(top, x) != x)
      throw error(errc::identity_law_fails,
                  "1*" + lat.label(x) + " = " + lat.label(mul.at(top, x)), {top, x});
  for (element_id a = 0; a < n; ++a)
    for (element_id b = 0; b < n; ++b)
      for (element_id c = b; c < n; ++c)
        if (mul.at(mul.at(a, b), c) != mul.at(a, mul.at(b, c)))
          throw error(errc::not_associative,
                      "(" + lat.label(a) + "*" + lat.label(b) + ")*" + lat.label(c) +
                          " differs from " + lat.label(a) + "*(" + lat.label(b) + "*" +
                          lat.label(c) + ")",
                      {a, b, c});
  for (element_id a = 0; a < n; ++a) {
    // Distribution over the empty join: a*0 = 0.
    if (mul.at(a, bottom) != bottom)
      throw error(errc::distributivity_fails,
                  lat.label(a) + "*0 = " + lat.label(mul.at(a, bottom)), {a, bottom});
    for (element_id b = 0; b < n; ++b)
      for (element_id c = b; c < n; ++c)
        if (mul.at(a, lat.join(b, c)) != lat.join(mul.at(a, b), mul.at(a, c)))
          throw error(errc::distributivity_fails,
                      lat.label(a) + "*(" + lat.label(b) + " v " + lat.label(c) +
                          ") differs from " + lat.label(a) + "*" + lat.label(b) + " v " +
                          lat.label(a) + "*" + lat.label(c),
                      {a, b, c});
  }

  // The axioms above force these; failing here means a defect in this function.
  for (element_id a = 0; a < n; ++a)
    for (element_id b = 0; b < n; ++b) {
      if (!lat.leq(mul.at(a, b), lat.meet(a, b)))
        throw std::logic_error("product escaped below the meet after validation");
      for (element_id c = 0; c < n; ++c)
        if (lat.leq(b, c) && !lat.leq(mul.at(a, b), mul.at(a, c)))
          throw std::logic_error("multiplication lost monotonicity after validation");
    }

  return mult_lattice(std::move(lat), std::move(mul), std::move(name));
}

bool is_frame(const mult_lattice& ml) {
  return ml.table() == mult_table::meet_table(ml.lattice());
}

} // namespace zlat
