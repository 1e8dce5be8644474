#pragma once

// Slow reference computations used only to cross-check the library.

#include <cstdint>
#include <map>
#include <numeric>
#include <queue>
#include <random>
#include <vector>

#include "tlinks/braid.hpp"
#include "tlinks/laurent.hpp"

namespace oracle {

using tlinks::BraidWord;
using tlinks::Polynomial;

// ---------------------------------------------------------------------------
// Positive braid words up to the braid relations, by breadth-first search.

using Letters = std::vector<int>;

inline std::vector<Letters> all_positive_words(int n, int length) {
  std::vector<Letters> out{{}};
  for (int l = 0; l < length; ++l) {
    std::vector<Letters> next;
    for (const auto& w : out)
      for (int g = 1; g < n; ++g) {
        auto v = w;
        v.push_back(g);
        next.push_back(std::move(v));
      }
    out = std::move(next);
  }
  return out;
}

inline std::vector<Letters> relation_neighbours(const Letters& w) {
  std::vector<Letters> out;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (std::abs(w[i] - w[i + 1]) >= 2) {
      auto v = w;
      std::swap(v[i], v[i + 1]);
      out.push_back(std::move(v));
    }
    if (i + 2 < w.size() && w[i] == w[i + 2] && std::abs(w[i] - w[i + 1]) == 1) {
      auto v = w;
      v[i] = w[i + 1];
      v[i + 1] = w[i];
      v[i + 2] = w[i + 1];
      out.push_back(std::move(v));
    }
  }
  return out;
}

// Class label of every positive word of the given length.
inline std::map<Letters, int> positive_classes(int n, int length) {
  std::map<Letters, int> label;
  int next = 0;
  for (const auto& w : all_positive_words(n, length)) {
    if (label.count(w)) continue;
    std::queue<Letters> todo;
    todo.push(w);
    label[w] = next;
    while (!todo.empty()) {
      const Letters cur = todo.front();
      todo.pop();
      for (auto& v : relation_neighbours(cur))
        if (label.emplace(v, next).second) todo.push(std::move(v));
    }
    ++next;
  }
  return label;
}

inline BraidWord to_word(const Letters& letters, int n) {
  BraidWord w(n);
  for (int g : letters) w.push_back({g, 1});
  return w;
}

// ---------------------------------------------------------------------------
// Random words.

inline BraidWord random_word(std::mt19937& rng, int n, int length, bool positive = false) {
  BraidWord w(n);
  if (n < 2) return w;
  std::uniform_int_distribution<int> gen(1, n - 1);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int i = 0; i < length; ++i) w.push_back({gen(rng), positive || coin(rng) ? 1 : -1});
  return w;
}

// ---------------------------------------------------------------------------
// Jones polynomial by summing all 2^c Kauffman states of the closed braid
// diagram. Same encoding as the library: exponent e means t^{e/2}.

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void join(int a, int b) { parent[find(a)] = find(b); }
};

inline Polynomial naive_jones(const BraidWord& w) {
  const int n = w.strands();
  const int c = static_cast<int>(w.size());
  auto node = [n](int level, int pos) { return level * n + pos; };
  std::map<int, std::int64_t> bracket;  // A-exponent -> coefficient
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << c); ++mask) {
    UnionFind uf((c + 1) * n);
    for (int i = 0; i < n; ++i) uf.join(node(c, i), node(0, i));
    int a_power = 0;
    for (int l = 0; l < c; ++l) {
      const auto g = w.letters()[static_cast<std::size_t>(l)];
      const int j = g.index - 1;
      for (int i = 0; i < n; ++i)
        if (i != j && i != j + 1) uf.join(node(l, i), node(l + 1, i));
      const bool vertical = (mask >> l) & 1;
      if (vertical) {
        uf.join(node(l, j), node(l + 1, j));
        uf.join(node(l, j + 1), node(l + 1, j + 1));
      } else {
        uf.join(node(l, j), node(l, j + 1));
        uf.join(node(l + 1, j), node(l + 1, j + 1));
      }
      // Vertical smoothing carries A at a positive crossing, A^-1 at a negative one.
      a_power += (vertical == (g.sign > 0)) ? 1 : -1;
    }
    int loops = 0;
    for (int v = 0; v < (c + 1) * n; ++v)
      if (uf.find(v) == v) ++loops;
    // d^{loops-1}, d = -A^2 - A^-2, expanded by the binomial theorem.
    const int k = loops - 1;
    std::int64_t binom = 1;
    for (int i = 0; i <= k; ++i) {
      const std::int64_t sign = (k % 2 == 0) ? 1 : -1;
      bracket[a_power + 2 * i - 2 * (k - i)] += sign * binom;
      binom = binom * (k - i) / (i + 1);
    }
  }
  const long writhe = w.exponent_sum();
  std::map<int, std::int64_t> out;
  for (const auto& [e, coeff] : bracket) {
    if (coeff == 0) continue;
    const long shifted = e - 3 * writhe;
    const std::int64_t value = (writhe % 2 != 0) ? -coeff : coeff;
    out[static_cast<int>(-shifted / 2)] += value;
  }
  return Polynomial::from_terms(out);
}

// ---------------------------------------------------------------------------
// Alexander polynomial from Fox derivatives of the closed braid group
// <x_1..x_n | x_i = beta(x_i)>, evaluated at x_i -> t, with one row and one
// column deleted and a cofactor-expansion determinant.

using FreeWord = std::vector<int>;  // +-(i+1) for x_i^{+-1}

inline FreeWord free_inverse(const FreeWord& w) {
  FreeWord out(w.rbegin(), w.rend());
  for (auto& x : out) x = -x;
  return out;
}

inline FreeWord free_reduce(const FreeWord& w) {
  FreeWord out;
  for (int x : w) {
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  return out;
}

// Images of the generators under beta acting on the right.
inline std::vector<FreeWord> artin_images(const BraidWord& b) {
  const int n = b.strands();
  std::vector<FreeWord> images(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) images[i] = {i + 1};
  for (const auto& g : b.letters()) {
    const int i = g.index - 1;
    auto substitute = [&](const FreeWord& w, const FreeWord& xi, const FreeWord& xj) {
      FreeWord out;
      for (int x : w) {
        const int idx = std::abs(x) - 1;
        const FreeWord* piece = nullptr;
        if (idx == i) piece = &xi;
        if (idx == i + 1) piece = &xj;
        if (!piece) {
          out.push_back(x);
          continue;
        }
        const FreeWord part = x > 0 ? *piece : free_inverse(*piece);
        out.insert(out.end(), part.begin(), part.end());
      }
      return free_reduce(out);
    };
    const FreeWord xi{i + 1}, xj{i + 2};
    FreeWord new_i, new_j;
    if (g.sign > 0) {
      new_i = {i + 1, i + 2, -(i + 1)};
      new_j = {i + 1};
    } else {
      new_i = {i + 2};
      new_j = {-(i + 2), i + 1, i + 2};
    }
    for (auto& img : images) img = substitute(img, new_i, new_j);
  }
  return images;
}

inline Polynomial fox_derivative(const FreeWord& w, int j) {
  Polynomial out;
  int prefix = 0;
  for (int x : w) {
    if (x > 0) {
      if (x - 1 == j) out += Polynomial::monomial(1, prefix);
      ++prefix;
    } else {
      --prefix;
      if (-x - 1 == j) out -= Polynomial::monomial(1, prefix);
    }
  }
  return out;
}

inline Polynomial cofactor_determinant(const std::vector<std::vector<Polynomial>>& m) {
  const std::size_t k = m.size();
  if (k == 0) return Polynomial::monomial(1);
  if (k == 1) return m[0][0];
  Polynomial det;
  for (std::size_t c = 0; c < k; ++c) {
    if (m[0][c].is_zero()) continue;
    std::vector<std::vector<Polynomial>> minor;
    for (std::size_t r = 1; r < k; ++r) {
      std::vector<Polynomial> row;
      for (std::size_t cc = 0; cc < k; ++cc)
        if (cc != c) row.push_back(m[r][cc]);
      minor.push_back(std::move(row));
    }
    const Polynomial term = m[0][c] * cofactor_determinant(minor);
    if (c % 2 == 0)
      det += term;
    else
      det -= term;
  }
  return det;
}

inline Polynomial fox_alexander(const BraidWord& b) {
  const int n = b.strands();
  const auto images = artin_images(b);
  std::vector<std::vector<Polynomial>> matrix;
  for (int i = 0; i + 1 < n; ++i) {
    const FreeWord relation = free_reduce([&] {
      FreeWord r = images[i];
      r.push_back(-(i + 1));
      return r;
    }());
    std::vector<Polynomial> row;
    for (int j = 0; j + 1 < n; ++j) row.push_back(fox_derivative(relation, j));
    matrix.push_back(std::move(row));
  }
  return cofactor_determinant(matrix).normalized();
}

}  // namespace oracle
