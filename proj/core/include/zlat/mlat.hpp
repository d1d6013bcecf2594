#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "zlat/quantale.hpp"

namespace zlat {

// Text format for structures, line oriented, UTF-8, # comments to end of line,
// commas or newlines between items:
//
//   lattice C3
//   elements 0 m 1
//   order 0 < m, m < 1
//   mult meet
//
// An explicit multiplication lists one triple "a b c" (a*b = c) for every
// unordered pair of non-identity, non-bottom elements; products with the top
// and bottom are implied and may be omitted:
//
//   mult
//     m m q, m q 0
//     q q 0
//
// Optional "query" lines carry command directives and are kept verbatim.
struct mlat_order_pair {
  std::string lo, hi;
  int line = 0, col = 0;
  // Positions are provenance, not content.
  friend bool operator==(const mlat_order_pair& a, const mlat_order_pair& b) {
    return a.lo == b.lo && a.hi == b.hi;
  }
};

struct mlat_triple {
  std::string a, b, c;
  int line = 0, col = 0;
  friend bool operator==(const mlat_triple& x, const mlat_triple& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c;
  }
};

struct mlat_document {
  std::string name;
  std::vector<std::string> elements;
  std::vector<mlat_order_pair> order_pairs;
  bool mult_is_meet = false;
  std::vector<mlat_triple> mult_triples;
  std::vector<std::string> queries;
  bool operator==(const mlat_document&) const = default;
};

// parse_error with a 1-based position on bad input: syntax_error (with the
// expected tokens), undeclared_label, duplicate_triple, conflicting_triple.
mlat_document parse_mlat(std::string_view text);

// serialize_mlat(parse_mlat(text)) re-parses to an equal document.
std::string serialize_mlat(const mlat_document& doc);

// Resolves labels, validates the order through validate_lattice, fills the
// implied top and bottom products, then validates the multiplication.
// missing_triple (as a parse_error) when an explicit table leaves a required
// pair undefined; lattice and quantale errors pass through.
mult_lattice structure_from_document(const mlat_document& doc);

// Canonical document for a structure: declared element order, cover pairs,
// "mult meet" exactly when the table is the meet table.
mlat_document document_from_structure(const mult_lattice& ml);

} // namespace zlat
