#pragma once

// T-links T((r_1,s_1),...,(r_k,s_k)) and their augmented parents
// T(p,q) u J_{a_1} u ... u J_{a_n}: text grammars, braid words, and the
// rewriting moves between equivalent T-links.

#include <array>
#include <cctype>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "tlinks/braid.hpp"
#include "tlinks/errors.hpp"
#include "tlinks/garside.hpp"

namespace tlinks {

struct Syllable {
  int span = 2;      // r: strands twisted
  int exponent = 1;  // s

  bool is_full_twist() const noexcept { return exponent % span == 0; }
  friend bool operator==(const Syllable&, const Syllable&) = default;
};

// Canonical on construction: adjacent syllables with equal span merge and
// zero exponents are dropped. Spans are then strictly increasing from 2.
class TLinkSpec {
 public:
  TLinkSpec() = default;

  explicit TLinkSpec(std::vector<Syllable> syllables) {
    for (const auto& s : syllables) {
      if (s.exponent < 0) throw ParameterError("T-link exponents must be non-negative");
      if (s.exponent == 0) continue;
      if (!syllables_.empty() && syllables_.back().span == s.span)
        syllables_.back().exponent += s.exponent;
      else
        syllables_.push_back(s);
    }
    if (syllables_.empty()) throw ParameterError("T-link needs at least one nonzero syllable");
    for (std::size_t i = 0; i < syllables_.size(); ++i) {
      if (syllables_[i].span < 2) throw ParameterError("T-link spans must be at least 2");
      if (i > 0 && syllables_[i].span <= syllables_[i - 1].span)
        throw ParameterError("T-link spans must be strictly increasing");
    }
  }

  const std::vector<Syllable>& syllables() const noexcept { return syllables_; }
  std::size_t size() const noexcept { return syllables_.size(); }
  int strands() const noexcept { return syllables_.back().span; }
  const Syllable& last() const { return syllables_.back(); }

  // Every syllable but the last is a full twist.
  bool leading_full_twists() const {
    for (std::size_t i = 0; i + 1 < syllables_.size(); ++i)
      if (!syllables_[i].is_full_twist()) return false;
    return true;
  }

  friend bool operator==(const TLinkSpec&, const TLinkSpec&) = default;

 private:
  std::vector<Syllable> syllables_;
};

// T(p,q) with unknotted circles J_a around the a leftmost strands.
struct ParentLinkSpec {
  int p = 3;
  int q = 2;
  std::vector<int> augmentations;

  ParentLinkSpec() = default;
  ParentLinkSpec(int p_, int q_, std::vector<int> a) : p(p_), q(q_), augmentations(std::move(a)) {
    if (std::gcd(p, q) != 1 || !(1 < q && q < p))
      throw ParameterError("parent link needs coprime 1 < q < p");
    if (augmentations.empty()) throw ParameterError("parent link needs at least one augmentation");
    for (std::size_t i = 0; i < augmentations.size(); ++i) {
      if (i > 0 && augmentations[i] <= augmentations[i - 1])
        throw ParameterError("augmentations must be strictly increasing");
    }
    if (augmentations.front() <= 1 || augmentations.back() >= p)
      throw ParameterError("augmentations must lie strictly between 1 and p");
  }

  friend bool operator==(const ParentLinkSpec&, const ParentLinkSpec&) = default;
};

// ---------------------------------------------------------------------------
// Text grammars: T((r1,s1),(r2,s2),...) and P(p,q;[a1,a2,...]).

namespace tlink_detail {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c)
      throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  int integer() {
    skip_space();
    const std::size_t start = pos_;
    bool negative = false;
    if (pos_ < text_.size() && text_[pos_] == '-') {
      negative = true;
      ++pos_;
    }
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      throw ParseError("expected an integer", pos_);
    long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1'000'000) throw ParseError("integer too large", start);
      ++pos_;
    }
    return static_cast<int>(negative ? -value : value);
  }

  void finish() {
    skip_space();
    if (pos_ != text_.size()) throw ParseError("trailing input", pos_);
  }

  std::size_t position() const noexcept { return pos_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace tlink_detail

inline TLinkSpec parse_tlink(std::string_view text) {
  tlink_detail::Cursor in(text);
  in.expect('T');
  in.expect('(');
  std::vector<Syllable> syllables;
  const std::size_t body = in.position();
  for (;;) {
    in.expect('(');
    const int r = in.integer();
    in.expect(',');
    const int s = in.integer();
    in.expect(')');
    syllables.push_back({r, s});
    if (!in.peek(',')) break;
    in.expect(',');
  }
  in.expect(')');
  in.finish();
  try {
    return TLinkSpec(std::move(syllables));
  } catch (const ParseError&) {
    throw;
  } catch (const ParameterError& e) {
    throw ParseError(e.what(), body);
  }
}

inline std::string format_tlink(const TLinkSpec& spec) {
  std::ostringstream os;
  os << "T(";
  for (std::size_t i = 0; i < spec.size(); ++i)
    os << (i ? "," : "") << '(' << spec.syllables()[i].span << ',' << spec.syllables()[i].exponent << ')';
  os << ')';
  return os.str();
}

inline ParentLinkSpec parse_parent(std::string_view text) {
  tlink_detail::Cursor in(text);
  in.expect('P');
  in.expect('(');
  const std::size_t body = in.position();
  const int p = in.integer();
  in.expect(',');
  const int q = in.integer();
  in.expect(';');
  in.expect('[');
  std::vector<int> a;
  if (!in.peek(']')) {
    a.push_back(in.integer());
    while (in.peek(',')) {
      in.expect(',');
      a.push_back(in.integer());
    }
  }
  in.expect(']');
  in.expect(')');
  in.finish();
  try {
    return ParentLinkSpec(p, q, std::move(a));
  } catch (const ParameterError& e) {
    throw ParseError(e.what(), body);
  }
}

inline std::string format_parent(const ParentLinkSpec& parent) {
  std::ostringstream os;
  os << "P(" << parent.p << ',' << parent.q << ";[";
  for (std::size_t i = 0; i < parent.augmentations.size(); ++i) os << (i ? "," : "") << parent.augmentations[i];
  os << "])";
  return os.str();
}

// ---------------------------------------------------------------------------
// Braid words and rewriting moves.

// Concatenation of the torus braids (r_i, s_i) on r_k strands.
inline BraidWord tlink_braid(const TLinkSpec& spec) {
  const int n = spec.strands();
  std::vector<BraidWord> parts;
  for (const auto& s : spec.syllables()) parts.push_back(torus_braid(s.span, s.exponent, n));
  return concat(parts);
}

// Outcome of a rewriting move that may not apply. When `applied` is false,
// `spec` is the input unchanged.
struct Rewrite {
  TLinkSpec spec;
  bool applied = false;
};

// T(..., (q, qk), ..., (p, q)) -> T(..., (p + qk, q)) for a final syllable
// (p, q) with gcd(p, q) = 1, an interior full twist on q strands, and only
// full-twist syllables between the two.
inline Rewrite absorb_interior_q_twists(const TLinkSpec& spec) {
  const auto& syl = spec.syllables();
  const int p = spec.last().span;
  const int q = spec.last().exponent;
  if (syl.size() < 2 || std::gcd(p, q) != 1) return {spec, false};
  for (std::size_t i = 0; i + 1 < syl.size(); ++i) {
    if (syl[i].span != q || syl[i].exponent % q != 0) continue;
    // The q-strand full twist must commute past every later syllable.
    bool commutes = true;
    for (std::size_t j = i + 1; j + 1 < syl.size(); ++j)
      if (syl[j].exponent % syl[j].span != 0) commutes = false;
    if (!commutes) return {spec, false};
    std::vector<Syllable> out;
    for (std::size_t j = 0; j + 1 < syl.size(); ++j)
      if (j != i) out.push_back(syl[j]);
    out.push_back({p + syl[i].exponent, q});
    return {TLinkSpec(std::move(out)), true};
  }
  return {spec, false};
}

// The r-strand word (sigma_{r-1} ... sigma_{r-q+1})^{p-r} . tangle .
// (sigma_1 ... sigma_{r-1})^q, whose closure is isotopic to the p-strand
// closure of tangle . (sigma_1 ... sigma_{p-1})^q.
inline BraidWord braid_move(const BraidWord& tangle, int p, int q) {
  const int r = tangle.strands();
  if (!(0 < q && q <= r && r < p)) throw ParameterError("braid_move needs 0 < q <= r < p");
  if (r == 1) return tangle;
  BraidWord prefix(r);
  for (int rep = 0; rep < p - r; ++rep)
    for (int i = r - 1; i >= r - q + 1; --i) prefix.push_back({i, 1});
  return concat({prefix, tangle, torus_braid(r, q, r)});
}

// The p-strand word that braid_move(tangle, p, q) simplifies.
inline BraidWord braid_move_source(const BraidWord& tangle, int p, int q) {
  if (!(0 < q && tangle.strands() < p)) throw ParameterError("braid_move_source needs 0 < q and r < p");
  return concat({widen(tangle, p), torus_braid(p, q, p)});
}

// Swaps the final syllable (P, S) -> (S, P) when every earlier syllable is a
// full twist. Throws ParameterError if S does not exceed the previous span.
inline Rewrite transpose_full_twisted(const TLinkSpec& spec) {
  if (!spec.leading_full_twists()) return {spec, false};
  const auto& syl = spec.syllables();
  const int big_p = spec.last().span;
  const int big_s = spec.last().exponent;
  if (syl.size() >= 2 && big_s <= syl[syl.size() - 2].span)
    throw ParameterError("transpose_full_twisted: final exponent must exceed the previous span");
  std::vector<Syllable> out(syl.begin(), syl.end() - 1);
  out.push_back({big_s, big_p});
  return {TLinkSpec(std::move(out)), true};
}

// 1/s_i Dehn filling on each J_{a_i}: T((a_1, a_1 s_1), ..., (p, q)).
inline TLinkSpec fill_parent(const ParentLinkSpec& parent, const std::vector<int>& twists) {
  if (twists.size() != parent.augmentations.size())
    throw ParameterError("fill_parent: one filling per augmentation");
  std::vector<Syllable> out;
  for (std::size_t i = 0; i < twists.size(); ++i) {
    if (twists[i] < 0) throw ParameterError("fill_parent: fillings must be non-negative");
    if (twists[i] > 0) out.push_back({parent.augmentations[i], parent.augmentations[i] * twists[i]});
  }
  out.push_back({parent.p, parent.q});
  return TLinkSpec(std::move(out));
}

// The (rq, sq) torus braid written as k full twists on rq strands followed by
// Delta_{1,rq} . Delta_{1,(r-t)q}^{-1} . Delta_{(r-t)q+1,rq}, s = t + kr.
struct HalfTwistFactorization {
  int r = 2, q = 1, t = 1, k = 0;
  std::array<BraidWord, 3> pieces;
  BraidWord filled;
  // filled . pieces equals torus_braid(rq, sq, rq) in the braid group.
  bool identity_holds = false;

  int s() const noexcept { return t + k * r; }
  BraidWord product() const { return concat({filled, pieces[0], pieces[1], pieces[2]}); }
};

inline HalfTwistFactorization halftwist_factorization(int r, int q, int t, int k) {
  if (r < 2 || q < 1 || k < 0) throw ParameterError("halftwist_factorization needs r >= 2, q >= 1, k >= 0");
  if (!(0 < t && t < r)) throw ParameterError("halftwist_factorization needs 0 < t < r");
  const int n = r * q;
  const int split = (r - t) * q;
  HalfTwistFactorization f;
  f.r = r;
  f.q = q;
  f.t = t;
  f.k = k;
  f.pieces = {half_twist(1, n, n, 1), half_twist(1, split, n, -1), half_twist(split + 1, n, n, 1)};
  f.filled = full_twist(n, k, n);
  f.identity_holds = braids_equal(f.product(), torus_braid(n, f.s() * q, n));
  return f;
}

// ---------------------------------------------------------------------------
// Braid index.

struct BraidIndex {
  int lower = 1;
  int upper = 1;
  bool exact = false;
  // Which argument produced the value.
  std::string method;

  int value() const { return lower; }
};

// Final syllable (p, q) with q <= r_n < p: the r_n-strand word obtained by
// moving the strands right of r_n, with the earlier syllables as the tangle.
inline std::optional<BraidWord> braid_move_reduction(const TLinkSpec& spec) {
  if (spec.size() < 2) return std::nullopt;
  const auto& syl = spec.syllables();
  const int p = spec.last().span;
  const int q = spec.last().exponent;
  const int rn = syl[syl.size() - 2].span;
  if (!(q <= rn && rn < p)) return std::nullopt;
  std::vector<BraidWord> parts;
  for (std::size_t i = 0; i + 1 < syl.size(); ++i) parts.push_back(torus_braid(syl[i].span, syl[i].exponent, rn));
  return braid_move(concat(parts), p, q);
}

inline BraidIndex tlink_braid_index(const TLinkSpec& spec) {
  const auto& syl = spec.syllables();
  const int p = spec.last().span;
  const int q = spec.last().exponent;
  if (syl.size() == 1 && q < p) return {q, q, true, "torus link T(p,q) with q < p"};
  if (syl.size() >= 2) {
    const auto& pen = syl[syl.size() - 2];
    if (q <= pen.span && pen.span <= pen.exponent + q)
      return {pen.span, pen.span, true, "q <= r_n <= s_n + q"};
  }
  const BraidWord word = tlink_braid(spec);
  if (positive_contains_full_twist(word)) return {p, p, true, "positive braid with a full twist"};
  if (auto reduced = braid_move_reduction(spec)) {
    if (positive_contains_full_twist(*reduced))
      return {reduced->strands(), reduced->strands(), true, "braid move reduction with a full twist"};
  }
  const int components = closure_data(word).component_count;
  int upper = p;
  if (auto reduced = braid_move_reduction(spec)) upper = reduced->strands();
  return {components, upper, false, "bounds"};
}

}  // namespace tlinks
