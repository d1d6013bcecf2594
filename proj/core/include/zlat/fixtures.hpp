#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "zlat/quantale.hpp"

namespace zlat {

// Built-in structure families.
//
//   chain_frame(n)    n-element chain with multiplication = meet
//   boolean_frame(k)  subsets of a k-set with multiplication = meet
//   zn_ideal(n)       ideals of Z/nZ: divisors of n ordered by reverse
//                     divisibility, (a)*(b) = (gcd(a*b, n)); elements are
//                     canonically ordered by increasing divisor
//   frame_of(lat)     multiplication = meet over a given lattice (rejects
//                     lattices whose meet fails join distributivity)
//
// bad_param on out-of-range parameters.
mult_lattice chain_frame(unsigned n);
mult_lattice boolean_frame(unsigned k);
mult_lattice zn_ideal(unsigned long long n);
mult_lattice frame_of(finite_lattice lat, std::string name = "");

// Named instances used throughout the test corpus:
//   C3  = chain_frame(3)   labels 0 m 1
//   B4  = boolean_frame(2) labels 0 a b 1
//   Z8  = zn_ideal(8)      the 4-chain (8) < (4) < (2) < (1)
//   D12 = zn_ideal(12)     divisors of 12
const std::vector<std::string>& fixture_names();

// Accepts a named instance (C3, B4, Z8, D12) or a family form chain:N,
// boolean:K, zn:N. bad_param when the name is unknown.
mult_lattice fixture_by_name(std::string_view name);

} // namespace zlat
