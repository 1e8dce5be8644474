#pragma once

// Invariants of braid closures: the Alexander polynomial from the reduced
// Burau representation, the closed form for torus knots, the genus of
// positive braid knots, and the Jones polynomial by a Kauffman bracket state
// sum.

#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tlinks/braid.hpp"
#include "tlinks/errors.hpp"
#include "tlinks/laurent.hpp"

namespace tlinks {

namespace invariants_detail {

template <typename C>
using Matrix = std::vector<std::vector<LaurentPoly<C>>>;

// Reduced Burau image of w, (n-1) x (n-1), as a product left to right.
// The matrix of sigma_i differs from the identity only in row i, which reads
// (t, -t, 1) in columns i-1, i, i+1 (entries off the matrix dropped); the
// inverse has row (1, -t^-1, t^-1).
template <typename C>
Matrix<C> reduced_burau(const BraidWord& w) {
  using P = LaurentPoly<C>;
  const int m = w.strands() - 1;
  Matrix<C> mat(static_cast<std::size_t>(m), std::vector<P>(static_cast<std::size_t>(m)));
  for (int i = 0; i < m; ++i) mat[i][i] = P::monomial(C(1));
  const P t = P::monomial(C(1), 1);
  const P minus_t = P::monomial(C(-1), 1);
  const P t_inv = P::monomial(C(1), -1);
  const P minus_t_inv = P::monomial(C(-1), -1);
  for (const auto& g : w.letters()) {
    const int r = g.index - 1;
    for (int row = 0; row < m; ++row) {
      const P col = mat[row][r];
      if (col.is_zero()) continue;
      if (g.sign > 0) {
        if (r > 0) mat[row][r - 1] += t * col;
        if (r + 1 < m) mat[row][r + 1] += col;
        mat[row][r] = minus_t * col;
      } else {
        if (r > 0) mat[row][r - 1] += col;
        if (r + 1 < m) mat[row][r + 1] += t_inv * col;
        mat[row][r] = minus_t_inv * col;
      }
    }
  }
  return mat;
}

// Fraction-free (Bareiss) determinant; every division is exact.
template <typename C>
LaurentPoly<C> determinant(Matrix<C> a) {
  using P = LaurentPoly<C>;
  const std::size_t m = a.size();
  if (m == 0) return P::monomial(C(1));
  P previous = P::monomial(C(1));
  bool negate = false;
  for (std::size_t k = 0; k < m; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < m && a[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == m) return P();
      std::swap(a[k], a[swap_row]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < m; ++i) {
      for (std::size_t j = k + 1; j < m; ++j)
        a[i][j] = exact_divide(a[k][k] * a[i][j] - a[i][k] * a[k][j], previous);
      a[i][k] = P();
    }
    previous = a[k][k];
  }
  return negate ? -a[m - 1][m - 1] : a[m - 1][m - 1];
}

template <typename C>
LaurentPoly<C> alexander_with(const BraidWord& w) {
  using P = LaurentPoly<C>;
  const int n = w.strands();
  if (n == 1) return P::monomial(C(1));
  auto mat = reduced_burau<C>(w);
  for (std::size_t i = 0; i < mat.size(); ++i) {
    for (auto& entry : mat[i]) entry = -entry;
    mat[i][i] += P::monomial(C(1));
  }
  const P det = determinant(std::move(mat));
  std::map<int, C> cyclotomic;
  for (int e = 0; e < n; ++e) cyclotomic.emplace(e, C(1));
  return exact_divide(det, P::from_terms(cyclotomic)).normalized();
}

}  // namespace invariants_detail

inline void require_knot_closure(const BraidWord& w, const char* what) {
  if (underlying_permutation(w).cycles().size() != 1)
    throw UnsupportedInput(std::string(what) + ": closure has more than one component");
}

// One-variable Alexander polynomial of the closure of w, knot or link, up to
// units. Zero for split links.
inline Polynomial closure_alexander(const BraidWord& w) {
  try {
    return invariants_detail::alexander_with<std::int64_t>(w);
  } catch (const OverflowError&) {
    return invariants_detail::alexander_with<boost::multiprecision::cpp_int>(w)
        .template convert<std::int64_t>();
  }
}

// Alexander polynomial of the knot closing w, normalized up to units:
// symmetric exponents, positive leading coefficient.
inline Polynomial alexander(const BraidWord& w) {
  require_knot_closure(w, "alexander");
  return closure_alexander(w);
}

// Alexander polynomial of the torus knot T(p, q):
// (t^{pq} - 1)(t - 1) / ((t^p - 1)(t^q - 1)).
inline Polynomial torus_alexander(int p, int q) {
  if (p < 1 || q < 1) throw ParameterError("torus_alexander needs p, q >= 1");
  if (std::gcd(p, q) != 1) throw ParameterError("torus_alexander needs coprime p, q");
  auto binomial = [](int e) {  // t^e - 1
    return Polynomial::monomial(1, e) - Polynomial::monomial(1, 0);
  };
  if (p == 1 || q == 1) return Polynomial::monomial(1);
  return exact_divide(binomial(p * q) * binomial(1), binomial(p) * binomial(q)).normalized();
}

// Genus of the Bennequin surface of a positive braid whose closure is a
// knot: (crossings - strands + 1) / 2.
inline int bennequin_genus(const BraidWord& w) {
  if (!w.is_positive()) throw UnsupportedInput("bennequin_genus: braid word is not positive");
  require_knot_closure(w, "bennequin_genus");
  return (static_cast<int>(w.size()) - w.strands() + 1) / 2;
}

inline constexpr int default_kauffman_cap = 24;

// Jones polynomial of the closure of w as a polynomial in t^{1/2}: the term
// c * x^e stands for c * t^{e/2}. Computed from the Kauffman bracket, keeping
// one bracket polynomial per planar connectivity pattern of the strands cut
// below the current crossing.
inline Polynomial jones_kauffman(const BraidWord& w, int crossing_cap = default_kauffman_cap) {
  if (static_cast<int>(w.size()) > crossing_cap)
    throw ResourceError("jones_kauffman: " + std::to_string(w.size()) + " crossings exceed the cap of " +
                        std::to_string(crossing_cap));
  const int n = w.strands();
  using State = std::vector<std::uint8_t>;  // matching on top (0..n-1) and bottom (n..2n-1) points
  const Polynomial a = Polynomial::monomial(1, 1);
  const Polynomial a_inv = Polynomial::monomial(1, -1);
  const Polynomial loop = Polynomial::monomial(-1, 2) - Polynomial::monomial(1, -2);

  State start(static_cast<std::size_t>(2 * n));
  for (int i = 0; i < n; ++i) {
    start[i] = static_cast<std::uint8_t>(n + i);
    start[n + i] = static_cast<std::uint8_t>(i);
  }
  std::map<State, Polynomial> states{{start, Polynomial::monomial(1)}};

  for (const auto& g : w.letters()) {
    const int left = n + g.index - 1;
    const int right = left + 1;
    const Polynomial& straight_weight = g.sign > 0 ? a : a_inv;
    const Polynomial& turn_weight = g.sign > 0 ? a_inv : a;
    std::map<State, Polynomial> next;
    for (const auto& [state, value] : states) {
      next[state] += straight_weight * value;
      State turned = state;
      const int x = state[left];
      const int y = state[right];
      Polynomial contribution = turn_weight * value;
      if (x == right) {
        contribution *= loop;
      } else {
        turned[x] = static_cast<std::uint8_t>(y);
        turned[y] = static_cast<std::uint8_t>(x);
      }
      turned[left] = static_cast<std::uint8_t>(right);
      turned[right] = static_cast<std::uint8_t>(left);
      next[turned] += contribution;
    }
    states.clear();
    for (auto& [state, value] : next)
      if (!value.is_zero()) states.emplace(state, std::move(value));
  }

  Polynomial bracket;
  for (const auto& [state, value] : states) {
    // Close top i to bottom n+i and count loops.
    std::vector<bool> seen(static_cast<std::size_t>(2 * n), false);
    int loops = 0;
    for (int s = 0; s < 2 * n; ++s) {
      if (seen[s]) continue;
      ++loops;
      int v = s;
      while (!seen[v]) {
        seen[v] = true;
        const int partner = state[v];
        seen[partner] = true;
        v = partner < n ? partner + n : partner - n;
      }
    }
    Polynomial term = value;
    for (int i = 1; i < loops; ++i) term *= loop;
    bracket += term;
  }

  // f(A) = (-A^3)^{-writhe} <L>; V(t) = f(t^{-1/4}).
  const long writhe = w.exponent_sum();
  Polynomial f = bracket.shifted(static_cast<int>(-3 * writhe));
  if (writhe % 2 != 0) f = -f;
  std::map<int, std::int64_t> out;
  for (const auto& [e, c] : f.terms()) {
    if (e % 2 != 0) throw ParameterError("jones_kauffman: odd A-exponent in normalized bracket");
    out.emplace(-e / 2, c);
  }
  return Polynomial::from_terms(out);
}

// Renders a jones_kauffman result in t with half-integer exponents.
inline std::string format_jones(const Polynomial& v) {
  if (v.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : v.terms()) {
    const bool negative = c < 0;
    const auto mag = negative ? -c : c;
    out += first ? (negative ? "-" : "") : (negative ? " - " : " + ");
    first = false;
    std::string exponent = e % 2 == 0 ? std::to_string(e / 2) : "(" + std::to_string(e) + "/2)";
    if (e == 0) {
      out += std::to_string(mag);
      continue;
    }
    if (mag != 1) out += std::to_string(mag) + "*";
    out += "t";
    if (e != 2) out += "^" + exponent;
  }
  return out;
}

}  // namespace tlinks
