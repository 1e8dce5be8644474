// Decomposes T((4,4),(7,2)) as a satellite, checks the decomposition with
// both invariants, and classifies a few neighbours.

#include <iostream>

#include "tlinks/tlinks.hpp"

int main() {
  using namespace tlinks;
  const TLinkSpec spec = parse_tlink("T((4,4),(7,2))");
  const auto d = halftwist_satellite(spec);
  if (!d) return 1;
  const SatelliteReport r = verify_satellite(spec, *d);
  std::cout << format_tlink(spec) << '\n'
            << "  companion  " << format_tlink(d->companion) << '\n'
            << "  pattern    " << format_word(d->pattern) << " on " << d->pattern.strands() << " strands\n"
            << "  alexander  " << r.knot_alexander.to_string() << '\n'
            << "  genus      " << r.knot_genus << " = " << r.pattern_genus << " + " << d->winding << " * "
            << r.companion_genus << '\n';

  for (const char* text : {"T((2,2),(3,6),(5,12))", "T((3,6),(4,8),(5,2))", "T((5,3))", "T((2,4),(5,3))"}) {
    const GeometricVerdict v = classify(parse_tlink(text));
    std::cout << text << "  " << to_string(v.kind);
    for (const auto& c : v.certificates) std::cout << "  " << anchor(c.rule);
    std::cout << '\n';
  }
  return r.passed() ? 0 : 1;
}
