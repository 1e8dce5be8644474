#pragma once

// Braid words on a fixed number of strands, permutations of strands, and
// the combinatorial data of braid closures (components, linking numbers).

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdlib>
#include <initializer_list>
#include <numeric>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "tlinks/errors.hpp"

namespace tlinks {

// One letter sigma_index^sign. Indices are 1-based: sigma_1 crosses strands
// 1 and 2.
struct Generator {
  int index = 1;
  int sign = 1;

  Generator inverse() const { return {index, -sign}; }
  friend bool operator==(const Generator&, const Generator&) = default;
};

class BraidWord {
 public:
  BraidWord() = default;

  explicit BraidWord(int strands) : strands_(strands) {
    if (strands < 1) throw ParameterError("braid needs at least one strand");
  }

  BraidWord(int strands, std::vector<Generator> letters)
      : strands_(strands), letters_(std::move(letters)) {
    if (strands < 1) throw ParameterError("braid needs at least one strand");
    for (const auto& g : letters_) check(g);
  }

  int strands() const noexcept { return strands_; }
  std::span<const Generator> letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  void push_back(Generator g) {
    check(g);
    letters_.push_back(g);
  }

  // Appends the letters of w, which may live on fewer strands.
  void append(const BraidWord& w) {
    if (w.strands_ > strands_) throw ParameterError("appended braid has too many strands");
    letters_.insert(letters_.end(), w.letters_.begin(), w.letters_.end());
  }

  // sigma_index^power, expanded.
  void append_power(int index, int power) {
    const Generator g{index, power >= 0 ? 1 : -1};
    check(g);
    letters_.insert(letters_.end(), static_cast<std::size_t>(std::abs(power)), g);
  }

  long exponent_sum() const noexcept {
    long sum = 0;
    for (const auto& g : letters_) sum += g.sign;
    return sum;
  }

  bool is_positive() const noexcept {
    return std::all_of(letters_.begin(), letters_.end(),
                       [](const Generator& g) { return g.sign > 0; });
  }

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  void check(const Generator& g) const {
    if (g.index < 1 || g.index > strands_ - 1)
      throw ParameterError("generator index " + std::to_string(g.index) +
                           " outside [1, " + std::to_string(strands_ - 1) + "]");
    if (g.sign != 1 && g.sign != -1) throw ParameterError("generator sign must be +1 or -1");
  }

  int strands_ = 1;
  std::vector<Generator> letters_;
};

// A bijection of {0, ..., n-1}. images()[i] is the bottom position reached by
// the strand that starts at top position i.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(int n) : images_(static_cast<std::size_t>(n)) {
    std::iota(images_.begin(), images_.end(), 0);
  }

  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
      if (v < 0 || static_cast<std::size_t>(v) >= images_.size() || seen[v])
        throw ParameterError("not a permutation");
      seen[v] = true;
    }
  }

  int size() const noexcept { return static_cast<int>(images_.size()); }
  int operator[](int i) const { return images_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& images() const noexcept { return images_; }

  // Swap the contents of bottom positions k and k+1 (post-compose with the
  // transposition (k k+1), 0-based).
  void apply_transposition(int k) {
    for (auto& v : images_) {
      if (v == k)
        v = k + 1;
      else if (v == k + 1)
        v = k;
    }
  }

  // (*this then other): strand i goes to other[(*this)[i]].
  Permutation then(const Permutation& other) const {
    std::vector<int> out(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) out[i] = other[images_[i]];
    return Permutation(std::move(out));
  }

  Permutation inverse() const {
    std::vector<int> out(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) out[images_[i]] = static_cast<int>(i);
    return Permutation(std::move(out));
  }

  // Cycles, each listed from its smallest element, ordered by that element.
  std::vector<std::vector<int>> cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t start = 0; start < images_.size(); ++start) {
      if (seen[start]) continue;
      std::vector<int> cycle;
      for (int v = static_cast<int>(start); !seen[v]; v = images_[v]) {
        seen[v] = true;
        cycle.push_back(v);
      }
      out.push_back(std::move(cycle));
    }
    return out;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

struct ClosureData {
  int component_count = 0;
  // component_of_strand[i]: component label of the strand at top position i
  // (0-based). Labels follow the order of the smallest strand in each cycle.
  std::vector<int> component_of_strand;
  // Symmetric, zero diagonal.
  std::vector<std::vector<long>> linking;
  long exponent_sum = 0;
};

// (sigma_1 ... sigma_{r-1})^s on n strands.
inline BraidWord torus_braid(int r, int s, int n) {
  if (r < 2) throw ParameterError("torus braid span must be at least 2");
  if (r > n) throw ParameterError("torus braid span exceeds strand count");
  if (s < 0) throw ParameterError("torus braid exponent must be non-negative");
  BraidWord w(n);
  for (int rep = 0; rep < s; ++rep)
    for (int i = 1; i < r; ++i) w.push_back({i, 1});
  return w;
}

// Half twist on the strand interval [a, b]:
// (sigma_a ... sigma_{b-1})(sigma_a ... sigma_{b-2}) ... (sigma_a).
// A negative sign gives the inverse word.
inline BraidWord half_twist(int a, int b, int n, int sign) {
  if (a < 1 || b > n || a > b) throw ParameterError("half twist strand interval out of range");
  if (sign != 1 && sign != -1) throw ParameterError("half twist sign must be +1 or -1");
  std::vector<Generator> letters;
  for (int top = b - 1; top >= a; --top)
    for (int i = a; i <= top; ++i) letters.push_back({i, 1});
  if (sign < 0) {
    std::reverse(letters.begin(), letters.end());
    for (auto& g : letters) g.sign = -1;
  }
  return BraidWord(n, std::move(letters));
}

// k full twists on the leftmost m strands.
inline BraidWord full_twist(int m, int k, int n) {
  if (k < 0) throw ParameterError("full twist count must be non-negative");
  return torus_braid(m, k * m, n);
}

inline BraidWord concat(std::span<const BraidWord> words) {
  if (words.empty()) throw ParameterError("concat needs at least one word");
  const int n = words.front().strands();
  std::vector<Generator> letters;
  for (const auto& w : words) {
    if (w.strands() != n) throw ParameterError("concat of braids with different strand counts");
    letters.insert(letters.end(), w.letters().begin(), w.letters().end());
  }
  return BraidWord(n, std::move(letters));
}

inline BraidWord concat(std::initializer_list<BraidWord> words) {
  return concat(std::span<const BraidWord>(words.begin(), words.size()));
}

inline BraidWord inverse(const BraidWord& w) {
  std::vector<Generator> letters(w.letters().rbegin(), w.letters().rend());
  for (auto& g : letters) g.sign = -g.sign;
  return BraidWord(w.strands(), std::move(letters));
}

// Pads `w` with trivial strands on the right.
inline BraidWord widen(const BraidWord& w, int n) {
  if (n < w.strands()) throw ParameterError("cannot narrow a braid");
  return BraidWord(n, {w.letters().begin(), w.letters().end()});
}

inline Permutation underlying_permutation(const BraidWord& w) {
  Permutation p(w.strands());
  for (const auto& g : w.letters()) p.apply_transposition(g.index - 1);
  return p;
}

inline ClosureData closure_data(const BraidWord& w) {
  const int n = w.strands();
  const auto cycles = underlying_permutation(w).cycles();
  ClosureData data;
  data.component_count = static_cast<int>(cycles.size());
  data.component_of_strand.assign(static_cast<std::size_t>(n), 0);
  for (std::size_t c = 0; c < cycles.size(); ++c)
    for (int s : cycles[c]) data.component_of_strand[s] = static_cast<int>(c);
  data.linking.assign(cycles.size(), std::vector<long>(cycles.size(), 0));

  // at_position[j]: top strand currently occupying position j.
  std::vector<int> at_position(static_cast<std::size_t>(n));
  std::iota(at_position.begin(), at_position.end(), 0);
  std::vector<std::vector<long>> crossings(cycles.size(), std::vector<long>(cycles.size(), 0));
  for (const auto& g : w.letters()) {
    const int left = at_position[g.index - 1];
    const int right = at_position[g.index];
    const int a = data.component_of_strand[left];
    const int b = data.component_of_strand[right];
    if (a != b) {
      crossings[a][b] += g.sign;
      crossings[b][a] += g.sign;
    }
    std::swap(at_position[g.index - 1], at_position[g.index]);
  }
  for (std::size_t a = 0; a < cycles.size(); ++a)
    for (std::size_t b = 0; b < cycles.size(); ++b) data.linking[a][b] = crossings[a][b] / 2;
  data.exponent_sum = w.exponent_sum();
  return data;
}

// Pairwise linking numbers of distinct components, sorted. Together with the
// component count this does not depend on component labels.
inline std::vector<long> linking_signature(const ClosureData& data) {
  std::vector<long> out;
  for (std::size_t a = 0; a < data.linking.size(); ++a)
    for (std::size_t b = a + 1; b < data.linking.size(); ++b) out.push_back(data.linking[a][b]);
  std::sort(out.begin(), out.end());
  return out;
}

// Text form: whitespace-separated signed generator indices, "2 -1 3".
inline std::string format_word(const BraidWord& w) {
  std::ostringstream os;
  bool first = true;
  for (const auto& g : w.letters()) {
    if (!first) os << ' ';
    os << g.sign * g.index;
    first = false;
  }
  return os.str();
}

inline BraidWord parse_word(std::string_view text, int strands) {
  if (strands < 1) throw ParameterError("strand count must be positive");
  BraidWord w(strands);
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    int sign = 1;
    if (text[i] == '-' || text[i] == '+') {
      if (text[i] == '-') sign = -1;
      ++i;
    }
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
      throw ParseError("expected a generator index", i);
    long value = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      value = value * 10 + (text[i] - '0');
      if (value > 1'000'000) throw ParseError("generator index too large", start);
      ++i;
    }
    if (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])))
      throw ParseError("unexpected character '" + std::string(1, text[i]) + "'", i);
    if (value < 1 || value > strands - 1)
      throw ParseError("generator " + std::to_string(value) + " outside [1, " +
                           std::to_string(strands - 1) + "]",
                       start);
    w.push_back({static_cast<int>(value), sign});
  }
  return w;
}

}  // namespace tlinks
