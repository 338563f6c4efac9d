#ifndef MFZ_BRACKET_HPP
#define MFZ_BRACKET_HPP

#include <string>

#include "mfz/error.hpp"

namespace mfz {

// Certified [lower, upper] interval for a scalar. meta records the word length
// / level and the method that produced each side.
struct Bracket {
  double lower = 0.0;
  double upper = 0.0;
  std::string meta;

  bool contains(double x, double tol = 1e-9) const {
    return lower - tol <= x && x <= upper + tol;
  }
  double width() const { return upper - lower; }
};

inline Bracket make_bracket(double lower, double upper, std::string meta) {
  if (!(lower <= upper + 1e-12)) fail(Errc::unresolved, "bracket inverted: " + meta);
  return Bracket{lower, upper, std::move(meta)};
}

}  // namespace mfz

#endif
