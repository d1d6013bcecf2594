#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zlat/quantale.hpp"

namespace zlat {

enum class theorem_id {
  mult_basics,
  max_prime,
  z_meets,
  z_residual,
  z_annihilator,
  z_product_szi,
  cz_laws,
  cz_join_eq,
  pz_char,
  nucleus_szi,
  quotient_frame_laws,
  regular_strongz,
  semisimple_dichotomy,
  quasilocal_pz,
  hom_inv,
  hom_kernel,
  eq_irr,
  eq_prime,
  eq_semiprime,
  eq_primary,
  vpss,
  z_decomp,
  min_zprime,
  min_zsi,
  zchain,
};

struct theorem_info {
  theorem_id id;
  std::string_view code;       // stable string form, e.g. "MULT-BASICS"
  std::string_view statement;  // self-contained formal statement of what is checked
  std::string_view hypothesis; // empty when unconditional
};

std::span<const theorem_info> theorem_catalog();
const theorem_info& theorem_about(theorem_id id);
theorem_id theorem_from_code(std::string_view code); // unknown_theorem_id

enum class verdict { pass, fail, not_applicable };
std::string_view verdict_name(verdict v);

// A fail verdict always carries the violated law's name and a witness tuple
// that recheck_witness can re-evaluate in isolation.
struct theorem_report {
  theorem_id id;
  std::string structure;
  verdict result = verdict::pass;
  std::string law;                  // violated law on fail, empty otherwise
  std::vector<element_id> witness;  // violating tuple on fail
  std::string detail;               // free-form notes (diagnostics, hypothesis info)
};

// Runs the selected theorems (all of them when the selection is empty) against
// one structure. Conditional theorems report not_applicable when their
// hypothesis fails. unknown_theorem_id on a bad selection entry.
std::vector<theorem_report> run_theorems(const mult_lattice& ml,
                                         std::span<const theorem_id> selection = {});

// Re-evaluates a fail report's law on its recorded witness, independently of
// the scan that produced it. True means the violation reproduces.
bool recheck_witness(const mult_lattice& ml, const theorem_report& report);

} // namespace zlat
