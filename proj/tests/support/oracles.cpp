#include "oracles.hpp"

#include <algorithm>
#include <numeric>

namespace oracle {

rel close(int n, const std::vector<std::pair<int, int>>& pairs) {
  rel r(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) r[i][i] = true;
  for (auto [a, b] : pairs) r[a][b] = true;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (r[i][k])
        for (int j = 0; j < n; ++j)
          if (r[k][j]) r[i][j] = true;
  return r;
}

bool antisymmetric(const rel& r) {
  int n = (int)r.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && r[a][b] && r[b][a]) return false;
  return true;
}

std::optional<int> lub(const rel& r, int a, int b) {
  int n = (int)r.size();
  std::vector<int> ubs;
  for (int u = 0; u < n; ++u)
    if (r[a][u] && r[b][u]) ubs.push_back(u);
  for (int u : ubs) {
    bool least = true;
    for (int v : ubs)
      if (!r[u][v]) { least = false; break; }
    if (least) return u;
  }
  return std::nullopt;
}

std::optional<int> glb(const rel& r, int a, int b) {
  int n = (int)r.size();
  std::vector<int> lbs;
  for (int u = 0; u < n; ++u)
    if (r[u][a] && r[u][b]) lbs.push_back(u);
  for (int u : lbs) {
    bool greatest = true;
    for (int v : lbs)
      if (!r[v][u]) { greatest = false; break; }
    if (greatest) return u;
  }
  return std::nullopt;
}

bool is_lattice(const rel& r) {
  int n = (int)r.size();
  if (n == 0 || !antisymmetric(r)) return false;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (!lub(r, a, b) || !glb(r, a, b)) return false;
  return true;
}

int bottom_of(const rel& r) {
  int n = (int)r.size();
  for (int x = 0; x < n; ++x) {
    bool least = true;
    for (int y = 0; y < n; ++y)
      if (!r[x][y]) { least = false; break; }
    if (least) return x;
  }
  return -1;
}

int top_of(const rel& r) {
  int n = (int)r.size();
  for (int x = 0; x < n; ++x) {
    bool greatest = true;
    for (int y = 0; y < n; ++y)
      if (!r[y][x]) { greatest = false; break; }
    if (greatest) return x;
  }
  return -1;
}

int meet_of_set(const rel& r, const std::vector<int>& xs) {
  if (xs.empty()) return top_of(r);
  int acc = xs[0];
  for (size_t i = 1; i < xs.size(); ++i) acc = *glb(r, acc, xs[i]);
  return acc;
}

int join_of_set(const rel& r, const std::vector<int>& xs) {
  if (xs.empty()) return bottom_of(r);
  int acc = xs[0];
  for (size_t i = 1; i < xs.size(); ++i) acc = *lub(r, acc, xs[i]);
  return acc;
}

std::vector<int> maximal_elements(const rel& r) {
  int n = (int)r.size();
  int top = top_of(r);
  std::vector<int> ms;
  for (int m = 0; m < n; ++m) {
    if (m == top) continue;
    bool coatom = true;
    for (int y = 0; y < n; ++y)
      if (y != m && y != top && r[m][y]) { coatom = false; break; }
    if (coatom) ms.push_back(m);
  }
  return ms;
}

static std::vector<bool> maximal_above(const rel& r, int a) {
  int n = (int)r.size();
  std::vector<bool> out(n, false);
  for (int m : maximal_elements(r))
    if (r[a][m]) out[m] = true;
  return out;
}

static bool superset(const std::vector<bool>& big, const std::vector<bool>& small) {
  for (size_t i = 0; i < big.size(); ++i)
    if (small[i] && !big[i]) return false;
  return true;
}

bool is_z_pair_form(const rel& r, int x) {
  int n = (int)r.size();
  for (int a = 0; a < n; ++a) {
    auto ma = maximal_above(r, a);
    for (int b = 0; b < n; ++b) {
      if (!r[b][x]) continue;
      if (superset(ma, maximal_above(r, b)) && !r[a][x]) return false;
    }
  }
  return true;
}

bool is_z_equal_form(const rel& r, int x) {
  int n = (int)r.size();
  for (int a = 0; a < n; ++a) {
    auto ma = maximal_above(r, a);
    for (int b = 0; b < n; ++b) {
      if (!r[b][x]) continue;
      if (ma == maximal_above(r, b) && !r[a][x]) return false;
    }
  }
  return true;
}

std::vector<int> z_set(const rel& r) {
  std::vector<int> zs;
  for (int x = 0; x < (int)r.size(); ++x)
    if (is_z_pair_form(r, x)) zs.push_back(x);
  return zs;
}

int little_m(const rel& r, int a) {
  std::vector<int> ms;
  for (int m : maximal_elements(r))
    if (r[a][m]) ms.push_back(m);
  return meet_of_set(r, ms);
}

int z_closure(const rel& r, int a) {
  std::vector<int> above;
  for (int z : z_set(r))
    if (r[a][z]) above.push_back(z);
  return meet_of_set(r, above);
}

bool mult_valid(const rel& r, const table& t) {
  int n = (int)r.size();
  int top = top_of(r), bot = bottom_of(r);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (t[a][b] != t[b][a]) return false;
  for (int a = 0; a < n; ++a)
    if (t[top][a] != a) return false;
  for (int a = 0; a < n; ++a)
    if (t[a][bot] != bot) return false;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (t[t[a][b]][c] != t[a][t[b][c]]) return false;
        if (t[a][*lub(r, b, c)] != *lub(r, t[a][b], t[a][c])) return false;
      }
  return true;
}

std::vector<int> primes_of(const rel& r, const table& t) {
  int n = (int)r.size();
  int top = top_of(r);
  std::vector<int> ps;
  for (int p = 0; p < n; ++p) {
    if (p == top) continue;
    bool prime = true;
    for (int x = 0; x < n && prime; ++x)
      for (int y = 0; y < n && prime; ++y)
        if (r[t[x][y]][p] && !r[x][p] && !r[y][p]) prime = false;
    if (prime) ps.push_back(p);
  }
  return ps;
}

int radical_via_primes(const rel& r, const table& t, int x) {
  std::vector<int> above;
  for (int p : primes_of(r, t))
    if (r[x][p]) above.push_back(p);
  return meet_of_set(r, above);
}

std::vector<int> z_primes_of(const rel& r, const table& t) {
  int n = (int)r.size();
  int top = top_of(r);
  auto zs = z_set(r);
  std::vector<bool> in_z(n, false);
  for (int z : zs) in_z[z] = true;
  std::vector<int> out;
  for (int p : zs) {
    if (p == top) continue;
    bool zp = true;
    for (int s : zs)
      for (int u : zs)
        if (r[t[s][u]][p] && !r[s][p] && !r[u][p]) { zp = false; }
    if (zp) out.push_back(p);
  }
  return out;
}

std::vector<int> minimal_of(const rel& r, const std::vector<int>& xs) {
  std::vector<int> out;
  for (int x : xs) {
    bool minimal = true;
    for (int y : xs)
      if (y != x && r[y][x]) { minimal = false; break; }
    if (minimal) out.push_back(x);
  }
  return out;
}

std::vector<table> all_mult_tables(const rel& r) {
  int n = (int)r.size();
  std::vector<table> out;
  table t(n, std::vector<int>(n, 0));
  long long total = 1;
  for (int i = 0; i < n * n; ++i) total *= n;
  for (long long code = 0; code < total; ++code) {
    long long c = code;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) { t[a][b] = (int)(c % n); c /= n; }
    if (mult_valid(r, t)) out.push_back(t);
  }
  return out;
}

bool rel_isomorphic(const rel& a, const rel& b) {
  if (a.size() != b.size()) return false;
  int n = (int)a.size();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j)
        if (a[i][j] != b[perm[i]][perm[j]]) ok = false;
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

std::vector<rel> all_lattices(int n) {
  // Strict pairs only in the numeric direction, so antisymmetry is automatic
  // and every isomorphism class with some topological labeling is reached.
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  std::vector<rel> classes;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    std::vector<std::pair<int, int>> pairs;
    for (size_t s = 0; s < slots.size(); ++s)
      if ((mask >> s) & 1) pairs.push_back(slots[s]);
    rel r = close(n, pairs);
    if (!is_lattice(r)) continue;
    bool seen = false;
    for (const rel& c : classes)
      if (rel_isomorphic(c, r)) { seen = true; break; }
    if (!seen) classes.push_back(r);
  }
  return classes;
}

fixture chain_frame(int n) {
  fixture f;
  for (int i = 0; i < n; ++i) {
    if (i == 0) f.labels.push_back("0");
    else if (i == n - 1) f.labels.push_back("1");
    else if (n == 3) f.labels.push_back("m");
    else f.labels.push_back("x" + std::to_string(i));
  }
  if (n == 1) f.labels = {"0"};
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
  f.order = close(n, pairs);
  f.mult.assign(n, std::vector<int>(n, 0));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) f.mult[a][b] = std::min(a, b);
  return f;
}

fixture boolean_frame(int k) {
  int n = 1 << k;
  fixture f;
  // Masks ordered by popcount then value; labels: 0, atoms a..z, joins as
  // concatenations, full set 1.
  std::vector<int> masks;
  for (int m = 0; m < n; ++m) masks.push_back(m);
  std::stable_sort(masks.begin(), masks.end(), [](int a, int b) {
    int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[masks[i]] = i;
  for (int m : masks) {
    if (m == 0) f.labels.push_back("0");
    else if (m == n - 1 && k > 0) f.labels.push_back("1");
    else {
      std::string s;
      for (int bit = 0; bit < k; ++bit)
        if ((m >> bit) & 1) s += (char)('a' + bit);
      f.labels.push_back(s);
    }
  }
  std::vector<std::pair<int, int>> pairs;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if ((x & y) == x) pairs.emplace_back(pos[x], pos[y]);
  f.order = close(n, pairs);
  f.mult.assign(n, std::vector<int>(n, 0));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      f.mult[pos[x]][pos[y]] = pos[x & y];
  return f;
}

fixture zn_ideal(unsigned long long n) {
  std::vector<unsigned long long> divs;
  for (unsigned long long d = 1; d <= n; ++d)
    if (n % d == 0) divs.push_back(d);
  int k = (int)divs.size();
  fixture f;
  for (auto d : divs) f.labels.push_back("(" + std::to_string(d) + ")");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (divs[i] % divs[j] == 0) pairs.emplace_back(i, j); // (a) <= (b) iff b | a
  f.order = close(k, pairs);
  f.mult.assign(k, std::vector<int>(k, 0));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      unsigned long long g = std::gcd(divs[i] * divs[j], n);
      f.mult[i][j] = (int)(std::find(divs.begin(), divs.end(), g) - divs.begin());
    }
  return f;
}

} // namespace oracle
