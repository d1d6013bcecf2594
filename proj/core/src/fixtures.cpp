#include "zlat/fixtures.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace zlat {

mult_lattice chain_frame(unsigned n) {
  if (n == 0 || n > max_universe)
    throw error(errc::bad_param, "chain length must be between 1 and " + std::to_string(max_universe));
  std::vector<std::pair<unsigned, unsigned>> pairs;
  for (unsigned i = 0; i + 1 < n; ++i) pairs.push_back({i, i + 1});
  std::vector<std::string> labels;
  if (n == 1) {
    labels = {"1"};
  } else if (n == 2) {
    labels = {"0", "1"};
  } else if (n == 3) {
    labels = {"0", "m", "1"};
  } else {
    labels.push_back("0");
    for (unsigned i = 1; i + 1 < n; ++i) labels.push_back("c" + std::to_string(i));
    labels.push_back("1");
  }
  finite_lattice lat = validate_lattice(n, pairs, std::move(labels));
  return validate_quantale(lat, mult_table::meet_table(lat), "chain:" + std::to_string(n));
}

mult_lattice boolean_frame(unsigned k) {
  if (k > 6) throw error(errc::bad_param, "boolean frames are supported up to 6 atoms");
  unsigned n = 1u << k;
  // Masks ordered by popcount, then numerically: bottom first, atoms next, top last.
  std::vector<unsigned> masks(n);
  std::iota(masks.begin(), masks.end(), 0u);
  std::stable_sort(masks.begin(), masks.end(), [](unsigned a, unsigned b) {
    return std::popcount(a) < std::popcount(b);
  });
  std::vector<unsigned> pos(n);
  for (unsigned i = 0; i < n; ++i) pos[masks[i]] = i;

  std::vector<std::string> labels(n);
  for (unsigned i = 0; i < n; ++i) {
    unsigned m = masks[i];
    if (m == 0) { labels[i] = "0"; continue; }
    if (m + 1 == n && k > 0) { labels[i] = "1"; continue; }
    std::string s;
    for (unsigned bit = 0; bit < k; ++bit)
      if ((m >> bit) & 1u) s.push_back(static_cast<char>('a' + bit));
    labels[i] = s;
  }
  if (k == 0) labels[0] = "1";

  std::vector<std::pair<unsigned, unsigned>> pairs;
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = 0; b < n; ++b)
      if ((masks[a] & masks[b]) == masks[a]) pairs.push_back({a, b});
  finite_lattice lat = validate_lattice(n, pairs, std::move(labels));
  return validate_quantale(lat, mult_table::meet_table(lat), "boolean:" + std::to_string(k));
}

mult_lattice zn_ideal(unsigned long long n) {
  if (n < 2) throw error(errc::bad_param, "the modulus must be at least 2");
  std::vector<unsigned long long> divs;
  for (unsigned long long d = 1; d <= n; ++d)
    if (n % d == 0) divs.push_back(d);
  if (divs.size() > max_universe)
    throw error(errc::bad_param, "the modulus has more divisors than the universe allows");
  unsigned m = static_cast<unsigned>(divs.size());

  // (a) <= (b) iff b | a; the unit ideal (1) is the top, (n) = (0) the bottom.
  std::vector<std::pair<unsigned, unsigned>> pairs;
  for (unsigned i = 0; i < m; ++i)
    for (unsigned j = 0; j < m; ++j)
      if (divs[i] % divs[j] == 0) pairs.push_back({i, j});
  std::vector<std::string> labels;
  for (unsigned long long d : divs) labels.push_back("(" + std::to_string(d) + ")");
  finite_lattice lat = validate_lattice(m, pairs, std::move(labels));

  mult_table mul(m, 0);
  for (unsigned i = 0; i < m; ++i)
    for (unsigned j = i; j < m; ++j) {
      unsigned long long g = std::gcd(divs[i] * divs[j], n);
      unsigned k = static_cast<unsigned>(std::lower_bound(divs.begin(), divs.end(), g) - divs.begin());
      mul.set(i, j, k);
    }
  return validate_quantale(lat, mul, "zn:" + std::to_string(n));
}

mult_lattice frame_of(finite_lattice lat, std::string name) {
  mult_table t = mult_table::meet_table(lat);
  return validate_quantale(std::move(lat), std::move(t), std::move(name));
}

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names{"C3", "B4", "Z8", "D12"};
  return names;
}

mult_lattice fixture_by_name(std::string_view name) {
  if (name == "C3") { auto m = chain_frame(3); return mult_lattice::unchecked(m.lattice(), m.table(), "C3"); }
  if (name == "B4") { auto m = boolean_frame(2); return mult_lattice::unchecked(m.lattice(), m.table(), "B4"); }
  if (name == "Z8") { auto m = zn_ideal(8); return mult_lattice::unchecked(m.lattice(), m.table(), "Z8"); }
  if (name == "D12") { auto m = zn_ideal(12); return mult_lattice::unchecked(m.lattice(), m.table(), "D12"); }

  auto colon = name.find(':');
  if (colon != std::string_view::npos) {
    std::string_view family = name.substr(0, colon);
    std::string_view arg = name.substr(colon + 1);
    unsigned long long v = 0;
    auto [p, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), v);
    if (ec == std::errc{} && p == arg.data() + arg.size()) {
      if (family == "chain") return chain_frame(static_cast<unsigned>(v));
      if (family == "boolean") return boolean_frame(static_cast<unsigned>(v));
      if (family == "zn") return zn_ideal(v);
    }
  }
  throw error(errc::bad_param, "unknown structure name: " + std::string(name));
}

} // namespace zlat
