#pragma once

#include <memory>
#include <string>
#include <vector>

#include "zlat/ids.hpp"
#include "zlat/lattice.hpp"

namespace zlat {

// Commutative multiplication table over a lattice universe.
class mult_table {
public:
  mult_table() = default;
  mult_table(unsigned n, element_id fill) : n_(n), p_(std::size_t{n} * n, fill) {}
  explicit mult_table(unsigned n, std::vector<element_id> cells) : n_(n), p_(std::move(cells)) {}

  static mult_table meet_table(const finite_lattice& lat);

  unsigned size() const { return n_; }
  element_id at(element_id a, element_id b) const { return p_[a * n_ + b]; }
  void set(element_id a, element_id b, element_id v) { p_[a * n_ + b] = v; p_[b * n_ + a] = v; }
  const std::vector<element_id>& cells() const { return p_; }
  bool operator==(const mult_table&) const = default;

private:
  unsigned n_ = 0;
  std::vector<element_id> p_;
};

// Fixed point the descending power chain x >= x^2 >= ... reaches, plus the
// spectra the toolkit keeps asking for. Computed lazily, at most once per
// structure, and shared between copies.
struct spectra_cache {
  element_set maximal;              // coatoms
  element_set primes;               // proper p with xy <= p => x <= p or y <= p
  element_set z_set;                // z-elements
  element_id jacobson = 0;          // meet of maximal (top when none)
  std::vector<element_set> big_m;   // M_a = maximal elements above a
  std::vector<element_id> little_m; // m_a = meet of M_a
  std::vector<element_id> cz;       // least z-element above a
  std::vector<element_id> stable_power; // limit of a, a^2, a^3, ...
};

// A finite multiplicative lattice: complete lattice plus an associative,
// commutative multiplication that distributes over joins and has the top as
// identity. Immutable after construction; queries are concurrency-safe.
class mult_lattice {
public:
  const finite_lattice& lattice() const { return lat_; }
  const mult_table& table() const { return mul_; }
  const std::string& name() const { return name_; }

  unsigned size() const { return lat_.size(); }
  bool leq(element_id a, element_id b) const { return lat_.leq(a, b); }
  element_id meet(element_id a, element_id b) const { return lat_.meet(a, b); }
  element_id join(element_id a, element_id b) const { return lat_.join(a, b); }
  element_id bottom() const { return lat_.bottom(); }
  element_id top() const { return lat_.top(); }
  const std::string& label(element_id x) const { return lat_.label(x); }

  element_id mul(element_id a, element_id b) const { return mul_.at(a, b); }

  // a^k for k >= 1; zero_exponent otherwise. Powers descend, so the chain is
  // followed only until it stabilizes (at most 2n steps).
  element_id power(element_id a, unsigned k) const;

  // Residual (a : b) = join of all l with l*b <= a.
  element_id residual(element_id a, element_id b) const;
  // Annihilator a(b) = (0 : b).
  element_id annihilator(element_id b) const;

  const spectra_cache& spectra() const;

  // Skips axiom validation; for callers that have already established the
  // axioms (the corpus enumerator, tests that need a deliberately broken
  // structure). Everything downstream assumes a valid table.
  static mult_lattice unchecked(finite_lattice lat, mult_table mul, std::string name = "");

private:
  mult_lattice(finite_lattice lat, mult_table mul, std::string name);

  finite_lattice lat_;
  mult_table mul_;
  std::string name_;
  struct cache_box;
  std::shared_ptr<cache_box> cache_;

  friend mult_lattice validate_quantale(finite_lattice lat, mult_table mul, std::string name);
};

// Checks commutativity, associativity, the identity law 1*x = x, binary join
// distributivity and x*0 = 0, each reported with a witness on failure. The
// elementary consequences (xy <= x /\ y, monotonicity in both arguments) are
// re-derived afterwards as a sanity oracle; a violation there is an internal
// defect, not an input error.
//
// Errors: shape_mismatch, foreign_element, not_commutative, not_associative,
// identity_law_fails, distributivity_fails.
mult_lattice validate_quantale(finite_lattice lat, mult_table mul, std::string name = "");

// True when the table equals the meet table.
bool is_frame(const mult_lattice& ml);

} // namespace zlat
