// Copyright (c) 2026 The crsphere authors
// SPDX-License-Identifier: Apache-2.0

#include "crsphere/rational.hpp"

#include <cstdio>
#include <stdexcept>

namespace crsphere {

Rational rational_from_string(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  mpq_class q;
  if (q.set_str(text, 10) != 0) {
    throw std::invalid_argument("malformed rational literal: " + text);
  }
  if (q.get_den() == 0) {
    throw std::invalid_argument("zero denominator in rational literal: " + text);
  }
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

}  // namespace crsphere
