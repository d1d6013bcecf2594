#pragma once

#include <utility>
#include <vector>

#include "zlat/quantale.hpp"

namespace zlat {

// Write M_a for the set of maximal elements above a and m_a for its meet.
// x is a z-element when pairs the maximal elements cannot tell apart are not
// told apart by x: whenever M_a contains M_b and b <= x, also a <= x.
//
// Three equivalent forms are computed and cross-checked structure-wide the
// first time any z query runs:
//   (A) the pair form above,
//   (B) m_x = x,
//   (C) cz(x) = x.
// A disagreement raises definition_disagreement and is a defect.
//
// The z_* flags quantify over z-elements only and additionally require x to be
// a proper z-element; they are false for non-z elements, so every profile is
// total. strong_z asks for x = m_x literally.
struct z_profile {
  element_id element = 0;
  element_set big_m;        // M_x
  element_id little_m = 0;  // m_x
  element_id cz = 0;
  bool is_z = false;
  bool z_prime = false;
  bool z_semiprime = false;
  bool z_primary = false;
  bool z_irreducible = false;
  bool z_strongly_irreducible = false;
  bool strong_z = false;
  bool basic_z = false;     // x = m_a for some a
};

struct z_predicates_record {
  bool szi = false;           // every basic z-element is idempotent
  bool pz = false;            // every prime is a z-element
  bool z_join_closed = false; // a, b z  =>  a \/ b z
};

// (M_a, m_a).
std::pair<element_set, element_id> maximal_cover(const mult_lattice& ml, element_id a);

bool is_z_element(const mult_lattice& ml, element_id x);

element_set z_elements(const mult_lattice& ml);

// Least z-element above a (the top is always a z-element, so this is total).
element_id z_closure(const mult_lattice& ml, element_id a);

z_profile z_classify(const mult_lattice& ml, element_id x);

z_predicates_record lattice_z_predicates(const mult_lattice& ml);

element_set z_primes(const mult_lattice& ml);
element_set z_irreducibles(const mult_lattice& ml);

// Minimal members of the z-prime set. trivial_lattice on the one-point
// structure.
element_set minimal_z_primes(const mult_lattice& ml);

// V_z(p) = z-primes above p.
element_set closed_set_Vz(const mult_lattice& ml, element_id p);

// A set S of z-irreducible elements with meet exactly x and no redundant
// member. Canonical choice: smallest cardinality, ties broken by lexicographic
// element order; the top decomposes as the empty meet. not_z_element when x is
// not a z-element.
std::vector<element_id> z_irreducible_decomposition(const mult_lattice& ml, element_id x);

// Z(L) as a structure of its own: carrier = z-elements, a (.) b = cz(a*b),
// a \/' b = cz(a \/ b), projected onto by cz. `structure` is the carrier
// re-indexed 0..k-1 and validated as a multiplicative lattice; carrier_of /
// index_of translate between the two. Construction re-checks the quotient
// laws and raises quotient_law_violation on any defect.
struct quotient_frame {
  element_set carrier;
  std::vector<element_id> odot;       // k*k, carrier indices
  std::vector<element_id> vee;        // k*k, carrier indices
  std::vector<element_id> projection; // size n: x -> carrier index of cz(x)
  mult_lattice structure;
  std::vector<element_id> carrier_of; // carrier index -> element of ml
  std::vector<element_id> index_of;   // element of ml -> carrier index (z-elements only)
};

quotient_frame z_quotient(const mult_lattice& ml);

} // namespace zlat
