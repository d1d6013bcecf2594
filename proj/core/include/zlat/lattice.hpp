#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zlat/ids.hpp"

namespace zlat {

struct cover_edge {
  element_id lower;
  element_id upper;
  bool operator==(const cover_edge&) const = default;
};

// A finite bounded lattice over elements 0..n-1. Instances are immutable once
// built by validate_lattice, so all queries are safe to run concurrently.
// Identity is positional: two lattices are equal only if their relations agree
// element-for-element. Use canonical_key / isomorphic from enumerate.hpp for
// structural comparison.
class finite_lattice {
public:
  unsigned size() const { return n_; }
  element_set universe() const { return element_set::full(n_); }

  bool leq(element_id a, element_id b) const { return up_[a].contains(b); }
  bool lt(element_id a, element_id b) const { return a != b && leq(a, b); }
  element_id meet(element_id a, element_id b) const { return meet_[a * n_ + b]; }
  element_id join(element_id a, element_id b) const { return join_[a * n_ + b]; }

  element_id bottom() const { return bottom_; }
  element_id top() const { return top_; }

  element_set up_set(element_id x) const { return up_[x]; }    // {y : x <= y}
  element_set down_set(element_id x) const { return down_[x]; } // {y : y <= x}

  const std::vector<cover_edge>& covers() const { return covers_; }
  element_set lower_covers(element_id x) const;
  element_set upper_covers(element_id x) const;

  const std::string& label(element_id x) const { return labels_[x]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<element_id> find_label(std::string_view label) const;

  // Meet of a subset; the empty meet is the top. Members outside the universe
  // raise foreign_element.
  element_id meet_of(element_set s) const;
  // Join of a subset; the empty join is the bottom.
  element_id join_of(element_set s) const;

  // All y with x /\ y = 0 and x \/ y = 1.
  element_set complements_of(element_id x) const;

  // Non-bottom elements with exactly one lower cover. Equivalently the
  // elements that are not joins of strictly smaller ones.
  element_set join_irreducibles() const;

  // Minimal members of s under the lattice order.
  element_set minimal_members(element_set s) const;
  element_set maximal_members(element_set s) const;

private:
  friend finite_lattice validate_lattice(unsigned n,
                                         std::span<const std::pair<unsigned, unsigned>> order_pairs,
                                         std::vector<std::string> labels);

  unsigned n_ = 0;
  std::vector<element_set> up_;
  std::vector<element_set> down_;
  std::vector<element_id> meet_;
  std::vector<element_id> join_;
  element_id bottom_ = 0;
  element_id top_ = 0;
  std::vector<cover_edge> covers_;
  std::vector<std::string> labels_;
};

// Builds a lattice from any generating set of order pairs (lo, hi), each
// meaning lo <= hi. The reflexive-transitive closure is taken first, then
// antisymmetry and unique meets/joins are checked; bottom and top are computed,
// never declared. Empty labels generate e0..e{n-1}.
//
// Errors: empty_universe, foreign_element (pair member >= n), bad_param
// (n > max_universe, duplicate labels), not_antisymmetric (reports a 2-cycle),
// no_unique_bound (reports the offending pair plus its minimal upper or
// maximal lower bounds).
finite_lattice validate_lattice(unsigned n,
                                std::span<const std::pair<unsigned, unsigned>> order_pairs,
                                std::vector<std::string> labels = {});

} // namespace zlat
