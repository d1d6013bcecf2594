#include "zlat/enumerate.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <numeric>

#include "zlat/fixtures.hpp"

namespace zlat {
namespace {

// Relation as one up-set mask per element, index order a linear extension.
struct order_relation {
  unsigned n = 0;
  std::array<std::uint32_t, 16> up{};
};

bool is_lattice_relation(const order_relation& r) {
  unsigned n = r.n;
  std::array<std::uint32_t, 16> down{};
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j)
      if (r.up[i] >> j & 1u) down[j] |= 1u << i;
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = i + 1; j < n; ++j) {
      std::uint32_t ub = r.up[i] & r.up[j];
      bool least = false;
      for (std::uint32_t m = ub; m; m &= m - 1) {
        unsigned l = static_cast<unsigned>(std::countr_zero(m));
        if ((ub & ~r.up[l]) == 0) { least = true; break; }
      }
      if (!least) return false;
      std::uint32_t lb = down[i] & down[j];
      bool greatest = false;
      for (std::uint32_t m = lb; m; m &= m - 1) {
        unsigned g = static_cast<unsigned>(std::countr_zero(m));
        if ((lb & ~down[g]) == 0) { greatest = true; break; }
      }
      if (!greatest) return false;
    }
  return true;
}

std::string key_under_perm(const finite_lattice& lat, const mult_table* mul,
                           const std::vector<unsigned>& p) {
  unsigned n = lat.size();
  std::vector<unsigned> inv(n);
  for (unsigned i = 0; i < n; ++i) inv[p[i]] = i;
  std::string s;
  s.reserve(static_cast<std::size_t>(n) * n * (mul ? 2 : 1) + 1);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j)
      s.push_back(lat.leq(p[i], p[j]) ? '1' : '0');
  if (mul) {
    s.push_back('|');
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j = 0; j < n; ++j)
        s.push_back(static_cast<char>('0' + inv[mul->at(p[i], p[j])]));
  }
  return s;
}

std::string minimal_key(const finite_lattice& lat, const mult_table* mul) {
  unsigned n = lat.size();
  std::vector<unsigned> p(n);
  std::iota(p.begin(), p.end(), 0u);
  std::string best;
  do {
    std::string k = key_under_perm(lat, mul, p);
    if (best.empty() || k < best) best = std::move(k);
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

std::vector<std::vector<unsigned>> automorphisms(const finite_lattice& lat) {
  unsigned n = lat.size();
  std::vector<unsigned> p(n);
  std::iota(p.begin(), p.end(), 0u);
  std::vector<std::vector<unsigned>> out;
  do {
    bool ok = true;
    for (unsigned i = 0; i < n && ok; ++i)
      for (unsigned j = 0; j < n && ok; ++j)
        if (lat.leq(i, j) != lat.leq(p[i], p[j])) ok = false;
    if (ok) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

} // namespace

mult_mode mult_mode_from_code(std::string_view code) {
  if (code == "all") return mult_mode::all;
  if (code == "frame-only") return mult_mode::frame_only;
  if (code == "fixtures-only") return mult_mode::fixtures_only;
  throw error(errc::bad_param, "unknown multiplication mode: " + std::string(code));
}

std::string_view mult_mode_code(mult_mode m) {
  switch (m) {
    case mult_mode::all: return "all";
    case mult_mode::frame_only: return "frame-only";
    case mult_mode::fixtures_only: return "fixtures-only";
  }
  return "?";
}

std::string canonical_key(const finite_lattice& lat) { return minimal_key(lat, nullptr); }

std::string canonical_key(const finite_lattice& lat, const mult_table& mul) {
  if (mul.size() != lat.size())
    throw error(errc::shape_mismatch, "table size does not match the universe");
  return minimal_key(lat, &mul);
}

bool isomorphic(const finite_lattice& a, const finite_lattice& b) {
  return a.size() == b.size() && canonical_key(a) == canonical_key(b);
}

bool isomorphic(const mult_lattice& a, const mult_lattice& b) {
  return a.size() == b.size() &&
         canonical_key(a.lattice(), a.table()) == canonical_key(b.lattice(), b.table());
}

std::vector<finite_lattice> enumerate_lattices(unsigned n, bool dedupe, unsigned ceiling) {
  if (n == 0) throw error(errc::bad_param, "no lattice on an empty universe");
  if (n > ceiling)
    throw error(errc::ceiling_exceeded,
                "size " + std::to_string(n) + " above the enumeration ceiling " +
                    std::to_string(ceiling));

  // Index order is forced to extend the lattice order, so candidate relations
  // live on the strictly upper-triangular pairs and antisymmetry is free.
  std::vector<std::pair<unsigned, unsigned>> slots;
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = i + 1; j < n; ++j) slots.emplace_back(i, j);

  // key: canonical key, then raw encoding for the non-deduped listing
  std::map<std::pair<std::string, std::string>, order_relation> seen;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    order_relation r;
    r.n = n;
    for (unsigned i = 0; i < n; ++i) r.up[i] = 1u << i;
    for (std::size_t s = 0; s < slots.size(); ++s)
      if (mask >> s & 1) r.up[slots[s].first] |= 1u << slots[s].second;
    bool transitive = true;
    for (unsigned i = 0; i < n && transitive; ++i)
      for (unsigned j = i + 1; j < n; ++j)
        if ((r.up[i] >> j & 1u) && (r.up[j] & ~r.up[i])) { transitive = false; break; }
    if (!transitive || !is_lattice_relation(r)) continue;

    std::string raw;
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j = 0; j < n; ++j) raw.push_back(r.up[i] >> j & 1u ? '1' : '0');
    std::vector<std::pair<unsigned, unsigned>> pairs;
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j = i + 1; j < n; ++j)
        if (r.up[i] >> j & 1u) pairs.emplace_back(i, j);
    finite_lattice lat = validate_lattice(n, pairs);
    std::string key = canonical_key(lat);
    seen.emplace(std::pair{std::move(key), dedupe ? std::string{} : std::move(raw)}, r);
  }

  std::vector<finite_lattice> out;
  std::string last_key;
  for (const auto& [k, r] : seen) {
    if (dedupe && k.first == last_key) continue;
    last_key = k.first;
    std::vector<std::pair<unsigned, unsigned>> pairs;
    for (unsigned i = 0; i < r.n; ++i)
      for (unsigned j = i + 1; j < r.n; ++j)
        if (r.up[i] >> j & 1u) pairs.emplace_back(i, j);
    out.push_back(validate_lattice(r.n, pairs));
  }
  return out;
}

std::vector<mult_table> multiplications_on(const finite_lattice& lat, bool dedupe) {
  unsigned n = lat.size();
  std::vector<element_id> ji = lat.join_irreducibles().to_vector();
  std::vector<std::pair<element_id, element_id>> slots;
  for (std::size_t i = 0; i < ji.size(); ++i)
    for (std::size_t j = i; j < ji.size(); ++j) slots.emplace_back(ji[i], ji[j]);

  std::vector<element_id> assign(slots.size(), 0);
  std::vector<mult_table> out;
  std::vector<std::string> seen_keys;
  auto autos = dedupe ? automorphisms(lat) : std::vector<std::vector<unsigned>>{};

  auto emit = [&] {
    mult_table t(n, lat.bottom());
    for (element_id a = 0; a < n; ++a)
      for (element_id b = a; b < n; ++b) {
        element_set prod;
        for (std::size_t s = 0; s < slots.size(); ++s) {
          auto [p, q] = slots[s];
          if ((lat.leq(p, a) && lat.leq(q, b)) || (lat.leq(p, b) && lat.leq(q, a)))
            prod.insert(assign[s]);
        }
        t.set(a, b, lat.join_of(prod));
      }
    try {
      validate_quantale(lat, t, "");
    } catch (const error&) {
      return;
    }
    if (dedupe) {
      std::string best;
      for (const auto& p : autos) {
        std::vector<unsigned> inv(n);
        for (unsigned i = 0; i < n; ++i) inv[p[i]] = i;
        std::string k;
        k.reserve(std::size_t{n} * n);
        for (unsigned i = 0; i < n; ++i)
          for (unsigned j = 0; j < n; ++j)
            k.push_back(static_cast<char>('0' + inv[t.at(p[i], p[j])]));
        if (best.empty() || k < best) best = std::move(k);
      }
      if (std::find(seen_keys.begin(), seen_keys.end(), best) != seen_keys.end()) return;
      seen_keys.push_back(std::move(best));
    }
    out.push_back(std::move(t));
  };

  auto rec = [&](auto&& self, std::size_t s) -> void {
    if (s == slots.size()) {
      emit();
      return;
    }
    auto [p, q] = slots[s];
    element_set domain = lat.down_set(lat.meet(p, q));
    for (element_id v : domain) {
      bool fits = true;
      for (std::size_t s2 = 0; s2 < s && fits; ++s2) {
        auto [p2, q2] = slots[s2];
        bool below = (lat.leq(p2, p) && lat.leq(q2, q)) || (lat.leq(p2, q) && lat.leq(q2, p));
        bool above = (lat.leq(p, p2) && lat.leq(q, q2)) || (lat.leq(p, q2) && lat.leq(q, p2));
        if (below && !lat.leq(assign[s2], v)) fits = false;
        if (above && !lat.leq(v, assign[s2])) fits = false;
      }
      if (!fits) continue;
      assign[s] = v;
      self(self, s + 1);
    }
  };
  rec(rec, 0);
  return out;
}

void enumerate_corpus(const corpus_spec& spec,
                      const std::function<void(const mult_lattice&)>& sink) {
  if (spec.max_n > spec.ceiling)
    throw error(errc::ceiling_exceeded,
                "corpus bound " + std::to_string(spec.max_n) + " above the ceiling " +
                    std::to_string(spec.ceiling));
  if (spec.mode == mult_mode::fixtures_only) {
    for (std::string_view name : fixture_names()) {
      mult_lattice ml = fixture_by_name(name);
      if (ml.size() <= spec.max_n) sink(ml);
    }
    return;
  }
  for (unsigned n = 1; n <= spec.max_n; ++n) {
    std::vector<finite_lattice> lats =
        enumerate_lattices(n, spec.dedupe_isomorphic, spec.ceiling);
    for (std::size_t li = 0; li < lats.size(); ++li) {
      const finite_lattice& lat = lats[li];
      std::string stem = "n" + std::to_string(n) + "l" + std::to_string(li);
      if (spec.mode == mult_mode::frame_only) {
        try {
          sink(validate_quantale(lat, mult_table::meet_table(lat), stem + "f"));
        } catch (const error&) {
          // meet fails the axioms exactly when the lattice is not distributive
        }
        continue;
      }
      std::vector<mult_table> tables = multiplications_on(lat, spec.dedupe_isomorphic);
      for (std::size_t ti = 0; ti < tables.size(); ++ti)
        sink(mult_lattice::unchecked(lat, tables[ti], stem + "m" + std::to_string(ti)));
    }
  }
}

std::vector<mult_lattice> corpus(const corpus_spec& spec) {
  std::vector<mult_lattice> out;
  enumerate_corpus(spec, [&](const mult_lattice& ml) { out.push_back(ml); });
  return out;
}

} // namespace zlat
