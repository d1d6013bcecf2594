#pragma once

// Bridges between library structures and the plain matrices the reference
// implementations consume, plus small label helpers shared by the test
// binaries. Nothing here feeds back into the library.

#include <algorithm>
#include <string>
#include <vector>

#include <zlat/quantale.hpp>

#include "oracles.hpp"

namespace testutil {

inline oracle::rel to_rel(const zlat::finite_lattice& lat) {
  int n = static_cast<int>(lat.size());
  oracle::rel r(n, std::vector<bool>(n, false));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) r[a][b] = lat.leq(a, b);
  return r;
}

inline oracle::table to_table(const zlat::mult_lattice& ml) {
  int n = static_cast<int>(ml.size());
  oracle::table t(n, std::vector<int>(n, 0));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = static_cast<int>(ml.mul(a, b));
  return t;
}

inline std::vector<std::string> labels_of(const zlat::mult_lattice& ml, zlat::element_set s) {
  std::vector<std::string> out;
  for (zlat::element_id x : s) out.push_back(ml.label(x));
  return out;
}

inline zlat::element_set set_of(const zlat::mult_lattice& ml,
                                const std::vector<std::string>& labels) {
  zlat::element_set s;
  for (const auto& l : labels) s.insert(*ml.lattice().find_label(l));
  return s;
}

inline std::vector<int> as_ints(zlat::element_set s) {
  std::vector<int> v;
  for (zlat::element_id x : s) v.push_back(static_cast<int>(x));
  return v;
}

inline std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

} // namespace testutil
