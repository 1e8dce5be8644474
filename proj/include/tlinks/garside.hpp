#pragma once

// Garside left normal form in the braid groups B_n. Simple elements
// (positive permutation braids) are stored as their permutations.

#include <sstream>
#include <string>
#include <vector>

#include "tlinks/braid.hpp"
#include "tlinks/errors.hpp"

namespace tlinks {

struct NormalForm {
  int strands = 1;
  // Power of the half twist Delta in front.
  int infimum = 0;
  // Left-weighted simple factors, none trivial and none equal to Delta.
  std::vector<Permutation> factors;

  int supremum() const noexcept { return infimum + static_cast<int>(factors.size()); }
  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

namespace garside_detail {

inline bool is_delta(const std::vector<int>& p) {
  const int n = static_cast<int>(p.size());
  for (int i = 0; i < n; ++i)
    if (p[i] != n - 1 - i) return false;
  return true;
}

// Makes (a, b) left-weighted in place: moves every sigma_k that starts b
// but does not finish a across the boundary. Returns whether anything moved.
inline bool left_weight(std::vector<int>& a, std::vector<int>& b) {
  const int n = static_cast<int>(a.size());
  std::vector<int> a_inv(a.size());
  bool changed = false;
  for (;;) {
    for (int i = 0; i < n; ++i) a_inv[a[i]] = i;
    int move = -1;
    for (int k = 0; k + 1 < n; ++k) {
      if (b[k] > b[k + 1] && a_inv[k] < a_inv[k + 1]) {
        move = k;
        break;
      }
    }
    if (move < 0) return changed;
    for (auto& v : a) {
      if (v == move)
        v = move + 1;
      else if (v == move + 1)
        v = move;
    }
    std::swap(b[move], b[move + 1]);
    changed = true;
  }
}

}  // namespace garside_detail

inline NormalForm left_normal_form(const BraidWord& w) {
  namespace gd = garside_detail;
  const int n = w.strands();
  NormalForm nf;
  nf.strands = n;
  if (n == 1) return nf;

  const auto letters = w.letters();
  // sigma_k^{-1} = Delta^{-1} * (Delta sigma_k^{-1}); every Delta^{-1} is then
  // moved to the front, flipping the simples it passes.
  std::vector<std::vector<int>> simples(letters.size());
  int negatives_right = 0;
  for (std::size_t j = letters.size(); j-- > 0;) {
    const int k = letters[j].index - 1;
    std::vector<int> s(static_cast<std::size_t>(n));
    if (letters[j].sign > 0) {
      for (int i = 0; i < n; ++i) s[i] = i;
      std::swap(s[k], s[k + 1]);
    } else {
      for (int i = 0; i < n; ++i) {
        int v = n - 1 - i;
        if (v == k)
          v = k + 1;
        else if (v == k + 1)
          v = k;
        s[i] = v;
      }
    }
    // Conjugation by Delta: sigma_i -> sigma_{n-i}.
    if (negatives_right % 2 == 1) {
      std::vector<int> flipped(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) flipped[i] = n - 1 - s[n - 1 - i];
      s = std::move(flipped);
    }
    simples[j] = std::move(s);
    if (letters[j].sign < 0) ++negatives_right;
  }

  auto identity_like = [n](const std::vector<int>& p) {
    for (int i = 0; i < n; ++i)
      if (p[i] != i) return false;
    return true;
  };

  std::vector<std::vector<int>> factors;
  for (auto& s : simples) {
    factors.push_back(std::move(s));
    for (std::size_t j = factors.size() - 1; j > 0; --j)
      if (!gd::left_weight(factors[j - 1], factors[j])) break;
    while (!factors.empty() && identity_like(factors.back())) factors.pop_back();
  }

  int deltas = 0;
  std::size_t first = 0;
  while (first < factors.size() && gd::is_delta(factors[first])) {
    ++deltas;
    ++first;
  }
  nf.infimum = deltas - negatives_right;
  for (std::size_t j = first; j < factors.size(); ++j) nf.factors.emplace_back(std::move(factors[j]));
  return nf;
}

inline bool braids_equal(const BraidWord& u, const BraidWord& v) {
  if (u.strands() != v.strands()) throw ParameterError("braids_equal: strand counts differ");
  return left_normal_form(u) == left_normal_form(v);
}

// A positive word contains Delta^2 as a left factor (equivalently, as a
// factor anywhere, since Delta^2 is central) iff its infimum is at least 2.
inline bool positive_contains_full_twist(const BraidWord& w) {
  if (!w.is_positive()) throw ParameterError("positive_contains_full_twist needs a positive word");
  if (w.strands() < 2) return false;
  return left_normal_form(w).infimum >= 2;
}

// "Δ^k | [images] | [images] ...", images 1-based.
inline std::string format_normal_form(const NormalForm& nf) {
  std::ostringstream os;
  os << "Δ^" << nf.infimum;
  for (const auto& f : nf.factors) {
    os << " | [";
    for (int i = 0; i < f.size(); ++i) os << (i ? " " : "") << f[i] + 1;
    os << ']';
  }
  return os.str();
}

}  // namespace tlinks
