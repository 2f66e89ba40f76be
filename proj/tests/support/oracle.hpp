#pragma once

// Brute-force reference computations for the tests. Everything here works on
// plain integer vectors and its own elimination routine so that it shares no
// code with the library it checks.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

namespace oracle {

using Exps = std::vector<int>;
using Row = std::vector<std::int64_t>;
using Dense = std::vector<Row>;  // row-major, rows × cols

inline std::int64_t mod(std::int64_t a, std::int64_t p) {
  a %= p;
  return a < 0 ? a + p : a;
}

inline std::int64_t power_mod(std::int64_t b, std::int64_t e, std::int64_t p) {
  std::int64_t r = 1;
  b = mod(b, p);
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

inline std::int64_t inverse_mod(std::int64_t a, std::int64_t p) { return power_mod(a, p - 2, p); }

// Column-by-column elimination with the bottom-most nonzero entry as pivot.
inline std::size_t rank_mod(Dense m, std::int64_t p) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  for (auto& row : m)
    for (auto& v : row) v = mod(v, p);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = rows;
    for (std::size_t i = rows; i-- > r;)
      if (m[i][c] != 0) {
        pivot = i;
        break;
      }
    if (pivot == rows) continue;
    std::swap(m[pivot], m[r]);
    const std::int64_t inv = inverse_mod(m[r][c], p);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      const std::int64_t f = m[i][c] * inv % p;
      for (std::size_t k = c; k < cols; ++k) m[i][k] = mod(m[i][k] - f * m[r][k], p);
    }
    ++r;
  }
  return r;
}

inline Dense zeros(std::size_t rows, std::size_t cols) { return Dense(rows, Row(cols, 0)); }

inline Dense hcat(const Dense& a, const Dense& b, std::size_t rows) {
  Dense out = zeros(rows, (a.empty() ? 0 : a[0].size()) + (b.empty() ? 0 : b[0].size()));
  for (std::size_t i = 0; i < rows; ++i) {
    std::size_t k = 0;
    if (!a.empty())
      for (auto v : a[i]) out[i][k++] = v;
    if (!b.empty())
      for (auto v : b[i]) out[i][k++] = v;
  }
  return out;
}

inline Dense mul(const Dense& a, const Dense& b, std::size_t inner, std::int64_t p) {
  if (a.empty() || b.empty() || b[0].empty()) return zeros(a.size(), b.empty() ? 0 : b[0].size());
  Dense out = zeros(a.size(), b[0].size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < inner; ++k)
      if (a[i][k])
        for (std::size_t j = 0; j < b[0].size(); ++j) out[i][j] = mod(out[i][j] + a[i][k] * b[k][j], p);
  return out;
}

// Basis of the null space, one column per vector (returned as rows × k).
inline Dense nullspace(Dense m, std::size_t cols, std::int64_t p) {
  const std::size_t rows = m.size();
  for (auto& row : m)
    for (auto& v : row) v = mod(v, p);
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (m[i][c] != 0) {
        pivot = i;
        break;
      }
    if (pivot == rows) continue;
    std::swap(m[pivot], m[r]);
    const std::int64_t inv = inverse_mod(m[r][c], p);
    for (auto& v : m[r]) v = v * inv % p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const std::int64_t f = m[i][c];
      for (std::size_t k = 0; k < cols; ++k) m[i][k] = mod(m[i][k] - f * m[r][k], p);
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_col) is_pivot[c] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < cols; ++c)
    if (!is_pivot[c]) free.push_back(c);
  Dense basis = zeros(cols, free.size());
  for (std::size_t k = 0; k < free.size(); ++k) {
    basis[free[k]][k] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) basis[pivot_col[i]][k] = mod(-m[i][free[k]], p);
  }
  return basis;
}

// All exponent vectors in `nvars` variables of total degree d (weights 1).
inline std::vector<Exps> monomials(std::size_t nvars, int d) {
  std::vector<Exps> out;
  if (d < 0) return out;
  Exps cur(nvars, 0);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == nvars) {
      cur[i] = left;
      out.push_back(cur);
      return;
    }
    for (int e = left; e >= 0; --e) {
      cur[i] = e;
      self(self, i + 1, left - e);
    }
  };
  if (nvars == 0) {
    if (d == 0) out.push_back({});
    return out;
  }
  rec(rec, 0, d);
  return out;
}

inline int degree(const Exps& e) {
  int s = 0;
  for (int v : e) s += v;
  return s;
}

inline Exps times(const Exps& a, const Exps& b) {
  Exps c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

inline Exps scaled(const Exps& a, int n) {
  Exps c(a);
  for (auto& v : c) v *= n;
  return c;
}

inline bool divides(const Exps& a, const Exps& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

/// k[x_1..x_s]/J for a monomial ideal J (possibly empty): a monomial survives
/// iff no generator of J divides it.
struct MonomialQuotient {
  std::size_t nvars = 0;
  std::vector<Exps> ideal;

  bool survives(const Exps& u) const {
    for (const auto& g : ideal)
      if (divides(g, u)) return false;
    return true;
  }
  std::vector<Exps> basis(int d) const {
    std::vector<Exps> out;
    for (auto& u : monomials(nvars, d))
      if (survives(u)) out.push_back(u);
    return out;
  }
};

inline std::vector<std::vector<std::size_t>> subsets(std::size_t r, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  for (std::uint32_t mask = 0; mask < (1u << r); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != k) continue;
    std::vector<std::size_t> s;
    for (std::size_t j = 0; j < r; ++j)
      if (mask & (1u << j)) s.push_back(j);
    out.push_back(s);
  }
  return out;
}

inline int sign(std::size_t j, const std::vector<std::size_t>& set) {
  int c = 0;
  for (auto k : set)
    if (k < j) ++c;
  return c % 2 ? -1 : 1;
}

/// Koszul (co)chains of monomials b_1..b_r with coefficients in M = k[x]/J,
/// one internal degree at a time. Chain spot i has basis (I, u) with |I| = i
/// and deg u = d − deg b_I; cochain spot i has deg u = d + deg b_I.
struct KoszulOracle {
  MonomialQuotient module;
  std::vector<Exps> elements;  // already raised to the wanted power
  bool cochain = false;
  std::int64_t p = 32003;

  struct Basis {
    std::vector<std::pair<std::vector<std::size_t>, Exps>> cells;
    std::size_t index(const std::vector<std::size_t>& set, const Exps& u) const {
      for (std::size_t k = 0; k < cells.size(); ++k)
        if (cells[k].first == set && cells[k].second == u) return k;
      return cells.size();
    }
  };

  Exps product(const std::vector<std::size_t>& set) const {
    Exps e(module.nvars, 0);
    for (auto j : set) e = times(e, elements[j]);
    return e;
  }

  Basis basis(int spot, int d) const {
    Basis b;
    if (spot < 0 || spot > static_cast<int>(elements.size())) return b;
    for (const auto& set : subsets(elements.size(), spot)) {
      const int shift = degree(product(set));
      for (const auto& u : module.basis(cochain ? d + shift : d - shift)) b.cells.push_back({set, u});
    }
    return b;
  }

  /// Differential leaving `spot` in degree d, as a (target × source) matrix.
  Dense differential(int spot, int d) const {
    const Basis src = basis(spot, d);
    const int to = cochain ? spot + 1 : spot - 1;
    const Basis tgt = basis(to, d);
    Dense m = zeros(tgt.cells.size(), src.cells.size());
    for (std::size_t c = 0; c < src.cells.size(); ++c) {
      const auto& [set, u] = src.cells[c];
      for (std::size_t j = 0; j < elements.size(); ++j) {
        const bool in = std::find(set.begin(), set.end(), j) != set.end();
        if (cochain == in) continue;
        std::vector<std::size_t> next;
        if (cochain) {
          next = set;
          next.push_back(j);
          std::sort(next.begin(), next.end());
        } else {
          for (auto k : set)
            if (k != j) next.push_back(k);
        }
        const Exps v = times(u, elements[j]);
        if (!module.survives(v)) continue;
        const std::size_t r = tgt.index(next, v);
        const int s = sign(j, cochain ? next : set);
        m[r][c] = mod(m[r][c] + s, p);
      }
    }
    return m;
  }

  std::size_t homology(int spot, int d) const {
    const std::size_t dim = basis(spot, d).cells.size();
    const int prev = cochain ? spot - 1 : spot + 1;
    return dim - rank_mod(differential(spot, d), p) - rank_mod(differential(prev, d), p);
  }
};

/// Rank of the map induced by e_I ↦ b_I^{|m−n|} e_I between Koszul homology of
/// the powers of `base`, in one degree: H(level n) → H(level m) with m ≥ n for
/// cochains, H(level m) → H(level n) with m ≥ n for chains.
inline std::size_t transition_rank(const MonomialQuotient& module, const std::vector<Exps>& base,
                                   int n, int m, int spot, int d, bool cochain, std::int64_t p) {
  auto at = [&](int level) {
    KoszulOracle k{module, {}, cochain, p};
    for (const auto& b : base) k.elements.push_back(scaled(b, level));
    return k;
  };
  const KoszulOracle src = at(cochain ? n : m), tgt = at(cochain ? m : n);
  const auto sb = src.basis(spot, d), tb = tgt.basis(spot, d);
  const std::size_t sdim = sb.cells.size(), tdim = tb.cells.size();
  if (sdim == 0 || tdim == 0) return 0;
  const Dense z = nullspace(src.differential(spot, d), sdim, p);
  Dense phi = zeros(tdim, sdim);
  for (std::size_t c = 0; c < sdim; ++c) {
    const auto& [set, u] = sb.cells[c];
    Exps lift(module.nvars, 0);
    for (auto j : set) lift = times(lift, scaled(base[j], m - n));
    const Exps v = times(u, lift);
    if (!module.survives(v)) continue;
    phi[tb.index(set, v)][c] = 1;
  }
  const Dense image = mul(phi, z, sdim, p);
  const Dense boundaries = tgt.differential(cochain ? spot - 1 : spot + 1, d);
  return rank_mod(hcat(boundaries, image, tdim), p) - rank_mod(boundaries, p);
}

inline std::size_t cochain_transition_rank(const MonomialQuotient& module,
                                           const std::vector<Exps>& base, int n, int m, int spot,
                                           int d, std::int64_t p) {
  return transition_rank(module, base, n, m, spot, d, true, p);
}

/// dim Γ^n in degree d for M = A/J and a monomial ideal: the monomials of
/// M_d killed by every product of n generators.
inline std::size_t torsion_dim(const MonomialQuotient& q, const std::vector<Exps>& gens, int n, int d) {
  std::vector<Exps> products{Exps(q.nvars, 0)};
  for (int k = 0; k < n; ++k) {
    std::vector<Exps> next;
    for (const auto& p : products)
      for (const auto& g : gens) next.push_back(times(p, g));
    products = std::move(next);
  }
  std::size_t count = 0;
  for (const auto& u : q.basis(d))
    if (std::all_of(products.begin(), products.end(), [&](const auto& w) { return !q.survives(times(u, w)); }))
      ++count;
  return count;
}

/// Is f (a coefficient map over exponent vectors of degree d) in the
/// k-span of {u·g : g in gens, deg u = d − deg g}?
inline bool in_ideal_span(const std::map<Exps, std::int64_t>& f,
                          const std::vector<std::map<Exps, std::int64_t>>& gens, std::size_t nvars,
                          int d, std::int64_t p) {
  const auto basis = monomials(nvars, d);
  std::map<Exps, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;
  Dense cols;
  for (const auto& g : gens) {
    const int dg = degree(g.begin()->first);
    for (const auto& u : monomials(nvars, d - dg)) {
      Row col(basis.size(), 0);
      for (const auto& [e, c] : g) col[index.at(times(e, u))] = mod(c, p);
      cols.push_back(col);
    }
  }
  Row fv(basis.size(), 0);
  for (const auto& [e, c] : f) fv[index.at(e)] = mod(c, p);
  // Rows of these transposed matrices are the spanning vectors.
  Dense with = cols;
  with.push_back(fv);
  if (cols.empty()) return std::all_of(fv.begin(), fv.end(), [](auto v) { return v == 0; });
  return rank_mod(cols, p) == rank_mod(with, p);
}

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline int uniform(std::mt19937_64& g, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(g);
}

}  // namespace oracle
