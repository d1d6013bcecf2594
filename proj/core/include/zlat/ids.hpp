#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace zlat {

using element_id = unsigned;

#ifndef ZLAT_MAX_UNIVERSE
#define ZLAT_MAX_UNIVERSE 64
#endif

// Universe ceiling. Element sets pack into one machine word, so 64 is the hard cap.
inline constexpr unsigned max_universe = ZLAT_MAX_UNIVERSE;
static_assert(max_universe >= 1 && max_universe <= 64);

// Subset of {0, ..., n-1} packed into a 64-bit word.
class element_set {
public:
  constexpr element_set() = default;
  constexpr explicit element_set(std::uint64_t bits) : bits_(bits) {}
  constexpr element_set(std::initializer_list<element_id> xs) {
    for (element_id x : xs) insert(x);
  }

  static constexpr element_set full(unsigned n) {
    return element_set(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr element_set single(element_id x) { return element_set(std::uint64_t{1} << x); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(element_id x) const { return (bits_ >> x) & 1u; }
  constexpr void insert(element_id x) { bits_ |= std::uint64_t{1} << x; }
  constexpr void erase(element_id x) { bits_ &= ~(std::uint64_t{1} << x); }
  constexpr unsigned count() const { return static_cast<unsigned>(std::popcount(bits_)); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool subset_of(element_set o) const { return (bits_ & ~o.bits_) == 0; }

  constexpr element_set operator&(element_set o) const { return element_set(bits_ & o.bits_); }
  constexpr element_set operator|(element_set o) const { return element_set(bits_ | o.bits_); }
  constexpr element_set operator-(element_set o) const { return element_set(bits_ & ~o.bits_); }
  constexpr bool operator==(const element_set&) const = default;

  // Least member; the set must be non-empty.
  constexpr element_id first() const { return static_cast<element_id>(std::countr_zero(bits_)); }

  class iterator {
  public:
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr element_id operator*() const { return static_cast<element_id>(std::countr_zero(rest_)); }
    constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
    constexpr bool operator!=(const iterator& o) const { return rest_ != o.rest_; }
  private:
    std::uint64_t rest_;
  };
  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<element_id> to_vector() const {
    std::vector<element_id> v;
    v.reserve(count());
    for (element_id x : *this) v.push_back(x);
    return v;
  }

private:
  std::uint64_t bits_ = 0;
};

enum class errc {
  // order validation
  empty_universe,
  not_antisymmetric,
  no_unique_bound,
  foreign_element,
  shape_mismatch,
  // multiplication validation
  not_commutative,
  not_associative,
  identity_law_fails,
  distributivity_fails,
  zero_exponent,
  bad_param,
  // spectra / z-theory
  trivial_lattice,
  radical_formula_mismatch,
  definition_disagreement,
  not_z_element,
  quotient_law_violation,
  // verifier
  unknown_theorem_id,
  unknown_property,
  ceiling_exceeded,
  // document parsing
  syntax_error,
  undeclared_label,
  duplicate_triple,
  missing_triple,
  conflicting_triple,
  unknown_command,
};

const char* errc_name(errc code);

class error : public std::runtime_error {
public:
  error(errc code, const std::string& message, std::vector<element_id> witness = {})
      : std::runtime_error(message), code_(code), witness_(std::move(witness)) {}

  errc code() const { return code_; }
  const std::vector<element_id>& witness() const { return witness_; }

private:
  errc code_;
  std::vector<element_id> witness_;
};

// Document-level error with a source position (1-based line and column).
class parse_error : public error {
public:
  parse_error(errc code, int line, int col, const std::string& message)
      : error(code, message), line_(line), col_(col) {}

  int line() const { return line_; }
  int col() const { return col_; }

private:
  int line_;
  int col_;
};

} // namespace zlat
