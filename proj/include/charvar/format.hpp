#pragma once

#include <cstdio>
#include <string>

#include "charvar/numlin.hpp"

namespace charvar {

/// "re+imj" / "re-imj" with 12 significant digits; negative zero prints as 0.
inline std::string format_complex(complex z) {
  auto clean = [](double x) { return x == 0.0 ? 0.0 : x; };
  const double re = clean(z.real());
  const double im = clean(z.imag());
  char buf[80];
  std::snprintf(buf, sizeof buf, "%.12g%c%.12gj", re, std::signbit(im) ? '-' : '+', std::abs(im));
  return buf;
}

} // namespace charvar
