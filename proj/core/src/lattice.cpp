#include "zlat/lattice.hpp"

#include <algorithm>
#include <sstream>

namespace zlat {

const char* errc_name(errc code) {
  switch (code) {
    case errc::empty_universe: return "EmptyUniverse";
    case errc::not_antisymmetric: return "NotAntisymmetric";
    case errc::no_unique_bound: return "NoUniqueBound";
    case errc::foreign_element: return "ForeignElement";
    case errc::shape_mismatch: return "ShapeMismatch";
    case errc::not_commutative: return "NotCommutative";
    case errc::not_associative: return "NotAssociative";
    case errc::identity_law_fails: return "IdentityLawFails";
    case errc::distributivity_fails: return "DistributivityFails";
    case errc::zero_exponent: return "ZeroExponent";
    case errc::bad_param: return "BadParam";
    case errc::trivial_lattice: return "TrivialLattice";
    case errc::radical_formula_mismatch: return "RadicalFormulaMismatch";
    case errc::definition_disagreement: return "DefinitionDisagreement";
    case errc::not_z_element: return "NotZElement";
    case errc::quotient_law_violation: return "QuotientLawViolation";
    case errc::unknown_theorem_id: return "UnknownTheoremId";
    case errc::unknown_property: return "UnknownProperty";
    case errc::ceiling_exceeded: return "CeilingExceeded";
    case errc::syntax_error: return "SyntaxError";
    case errc::undeclared_label: return "UndeclaredLabel";
    case errc::duplicate_triple: return "DuplicateTriple";
    case errc::missing_triple: return "MissingTriple";
    case errc::conflicting_triple: return "ConflictingTriple";
    case errc::unknown_command: return "UnknownCommand";
  }
  return "?";
}

std::optional<element_id> finite_lattice::find_label(std::string_view label) const {
  for (element_id x = 0; x < n_; ++x)
    if (labels_[x] == label) return x;
  return std::nullopt;
}

element_set finite_lattice::lower_covers(element_id x) const {
  element_set out;
  for (const cover_edge& e : covers_)
    if (e.upper == x) out.insert(e.lower);
  return out;
}

element_set finite_lattice::upper_covers(element_id x) const {
  element_set out;
  for (const cover_edge& e : covers_)
    if (e.lower == x) out.insert(e.upper);
  return out;
}

element_id finite_lattice::meet_of(element_set s) const {
  if (!s.subset_of(universe()))
    throw error(errc::foreign_element, "set member outside the universe");
  element_id acc = top_;
  for (element_id x : s) acc = meet(acc, x);
  return acc;
}

element_id finite_lattice::join_of(element_set s) const {
  if (!s.subset_of(universe()))
    throw error(errc::foreign_element, "set member outside the universe");
  element_id acc = bottom_;
  for (element_id x : s) acc = join(acc, x);
  return acc;
}

element_set finite_lattice::complements_of(element_id x) const {
  element_set out;
  for (element_id y = 0; y < n_; ++y)
    if (meet(x, y) == bottom_ && join(x, y) == top_) out.insert(y);
  return out;
}

element_set finite_lattice::join_irreducibles() const {
  element_set out;
  for (element_id x = 0; x < n_; ++x)
    if (x != bottom_ && lower_covers(x).count() == 1) out.insert(x);
  return out;
}

element_set finite_lattice::minimal_members(element_set s) const {
  element_set out;
  for (element_id x : s)
    if ((down_[x] & s) == element_set::single(x)) out.insert(x);
  return out;
}

element_set finite_lattice::maximal_members(element_set s) const {
  element_set out;
  for (element_id x : s)
    if ((up_[x] & s) == element_set::single(x)) out.insert(x);
  return out;
}

finite_lattice validate_lattice(unsigned n,
                                std::span<const std::pair<unsigned, unsigned>> order_pairs,
                                std::vector<std::string> labels) {
  if (n == 0) throw error(errc::empty_universe, "a lattice needs at least one element");
  if (n > max_universe)
    throw error(errc::bad_param,
                "universe of " + std::to_string(n) + " exceeds the configured maximum of " +
                    std::to_string(max_universe));
  if (!labels.empty() && labels.size() != n)
    throw error(errc::shape_mismatch, "label count does not match the universe size");
  if (labels.empty()) {
    labels.reserve(n);
    for (unsigned i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
  }
  {
    auto sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw error(errc::bad_param, "duplicate element label");
  }

  finite_lattice L;
  L.n_ = n;
  L.labels_ = std::move(labels);
  L.up_.assign(n, element_set{});
  for (element_id x = 0; x < n; ++x) L.up_[x].insert(x);
  for (auto [a, b] : order_pairs) {
    if (a >= n || b >= n)
      throw error(errc::foreign_element, "order pair member outside the universe",
                  {static_cast<element_id>(a), static_cast<element_id>(b)});
    L.up_[a].insert(b);
  }
  // Reflexive-transitive closure over the up-set rows.
  for (bool changed = true; changed;) {
    changed = false;
    for (element_id x = 0; x < n; ++x) {
      element_set acc = L.up_[x];
      for (element_id y : L.up_[x]) acc = acc | L.up_[y];
      if (!(acc == L.up_[x])) { L.up_[x] = acc; changed = true; }
    }
  }
  L.down_.assign(n, element_set{});
  for (element_id x = 0; x < n; ++x)
    for (element_id y : L.up_[x]) L.down_[y].insert(x);

  for (element_id x = 0; x < n; ++x)
    for (element_id y : L.up_[x])
      if (y != x && L.up_[y].contains(x))
        throw error(errc::not_antisymmetric,
                    "order cycle between " + L.labels_[x] + " and " + L.labels_[y], {x, y});

  L.meet_.assign(std::size_t{n} * n, 0);
  L.join_.assign(std::size_t{n} * n, 0);
  auto describe = [&](element_set s) {
    std::ostringstream os;
    bool first = true;
    for (element_id m : s) {
      if (!first) os << ", ";
      os << L.labels_[m];
      first = false;
    }
    return os.str();
  };
  for (element_id a = 0; a < n; ++a)
    for (element_id b = a; b < n; ++b) {
      element_set ub = L.up_[a] & L.up_[b];
      element_set least = L.minimal_members(ub);
      if (least.count() != 1) {
        std::vector<element_id> w{a, b};
        for (element_id m : least) w.push_back(m);
        throw error(errc::no_unique_bound,
                    "elements " + L.labels_[a] + " and " + L.labels_[b] +
                        (least.empty() ? " have no upper bound"
                                       : " have minimal upper bounds {" + describe(least) + "}"),
                    w);
      }
      element_set lb = L.down_[a] & L.down_[b];
      element_set greatest = L.maximal_members(lb);
      if (greatest.count() != 1) {
        std::vector<element_id> w{a, b};
        for (element_id m : greatest) w.push_back(m);
        throw error(errc::no_unique_bound,
                    "elements " + L.labels_[a] + " and " + L.labels_[b] +
                        (greatest.empty() ? " have no lower bound"
                                          : " have maximal lower bounds {" + describe(greatest) + "}"),
                    w);
      }
      element_id j = least.first(), m = greatest.first();
      L.join_[a * n + b] = L.join_[b * n + a] = j;
      L.meet_[a * n + b] = L.meet_[b * n + a] = m;
    }

  element_id bot = 0, top = 0;
  for (element_id x = 0; x < n; ++x) {
    bot = L.meet_[bot * n + x];
    top = L.join_[top * n + x];
  }
  L.bottom_ = bot;
  L.top_ = top;

  for (element_id x = 0; x < n; ++x)
    for (element_id y : L.up_[x]) {
      if (y == x) continue;
      if ((L.up_[x] & L.down_[y]).count() == 2) L.covers_.push_back({x, y});
    }
  std::sort(L.covers_.begin(), L.covers_.end(), [](const cover_edge& a, const cover_edge& b) {
    return a.lower != b.lower ? a.lower < b.lower : a.upper < b.upper;
  });
  return L;
}

} // namespace zlat
