#pragma once

#include "zlat/quantale.hpp"

namespace zlat {

// Flags that require properness (everything except complemented, idempotent
// and radical_element) are false for the top element.
struct classification_record {
  element_id element = 0;
  bool proper = false;
  bool maximal = false;
  bool prime = false;                // xy <= p  =>  x <= p or y <= p
  bool semiprime = false;            // x^2 <= q  =>  x <= q
  bool primary = false;              // xy <= r  =>  x <= r or y^n <= r for some n
  bool irreducible = false;          // a /\ b = s  =>  a = s or b = s
  bool strongly_irreducible = false; // a /\ b <= s  =>  a <= s or b <= s
  bool complemented = false;
  bool radical_element = false;      // radical(x) = x
  bool idempotent = false;           // x*x = x
  element_id radical = 0;
};

struct lattice_predicates_record {
  bool semisimple = false;  // jacobson radical = bottom
  bool quasi_local = true;  // finitely many maximal elements; always true here
  unsigned maximal_count = 0;
  bool regular = false;     // every element complemented
  bool frame = false;       // multiplication = meet
  bool top_compact = true;  // automatic in a finite lattice
};

// Coatoms. trivial_lattice on the one-point structure, which has no proper
// elements.
element_set maximal_elements(const mult_lattice& ml);

element_set primes(const mult_lattice& ml);

// V_P(a) = primes above a.
element_set closed_set_VP(const mult_lattice& ml, element_id a);

// Minimal members of V_P(a).
element_set minimal_primes_over(const mult_lattice& ml, element_id a);

// radical(x) is evaluated three ways: join of elements with a power below x,
// meet of primes above x, and meet of the minimal primes over x. The three
// must agree; a disagreement raises radical_formula_mismatch and means a
// defect, not bad input.
element_id radical(const mult_lattice& ml, element_id x);

// Meet of the maximal elements. trivial_lattice on the one-point structure.
element_id jacobson_radical(const mult_lattice& ml);

classification_record classify_element(const mult_lattice& ml, element_id x);

lattice_predicates_record lattice_predicates(const mult_lattice& ml);

} // namespace zlat
