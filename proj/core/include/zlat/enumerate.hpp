#pragma once

#include <functional>
#include <string>
#include <vector>

#include "zlat/quantale.hpp"

namespace zlat {

enum class mult_mode { all, frame_only, fixtures_only };
mult_mode mult_mode_from_code(std::string_view code); // bad_param
std::string_view mult_mode_code(mult_mode m);

struct corpus_spec {
  unsigned max_n = 5;
  mult_mode mode = mult_mode::all;
  bool dedupe_isomorphic = true;
  unsigned ceiling = 6; // enumeration refuses larger max_n (ceiling_exceeded)
};

// Lexicographically minimal encoding of the order relation (and multiplication
// table, for structures) over all element permutations. Two objects are
// isomorphic exactly when their keys agree.
std::string canonical_key(const finite_lattice& lat);
std::string canonical_key(const finite_lattice& lat, const mult_table& mul);

bool isomorphic(const finite_lattice& a, const finite_lattice& b);
bool isomorphic(const mult_lattice& a, const mult_lattice& b);

// All lattices with exactly n elements, one per isomorphism class when dedupe
// is set, in canonical-key order. ceiling_exceeded when n > ceiling.
std::vector<finite_lattice> enumerate_lattices(unsigned n, bool dedupe = true,
                                               unsigned ceiling = 6);

// Every multiplication table on lat satisfying the axioms. Products are fixed
// on join-irreducible pairs and extended by join distributivity, then filtered
// through full validation; with dedupe set, tables equivalent under a lattice
// automorphism are emitted once. Deterministic order. A lattice whose meet
// fails join distributivity admits no table at all; such lattices yield few or
// no entries and that is the correct answer, not a gap.
std::vector<mult_table> multiplications_on(const finite_lattice& lat, bool dedupe = true);

// Streams the corpus in a deterministic order: sizes ascending, lattices in
// canonical-key order, multiplications in table order. fixtures_only streams
// the named fixtures (sizes filtered by max_n) instead.
void enumerate_corpus(const corpus_spec& spec,
                      const std::function<void(const mult_lattice&)>& sink);

std::vector<mult_lattice> corpus(const corpus_spec& spec);

} // namespace zlat
