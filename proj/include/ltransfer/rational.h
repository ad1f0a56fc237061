// Copyright 2026 The ltransfer Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LTRANSFER_RATIONAL_H_
#define LTRANSFER_RATIONAL_H_

#include <cstdint>
#include <string>
#include <vector>

#include <boost/rational.hpp>

// Boost before 1.75 recurses forever on mixed integer/rational equality under
// C++20 rewritten comparisons. Exact non-template overloads win resolution.
namespace boost {

inline bool operator==(const rational<std::int64_t>& a, std::int64_t b) {
  return a.denominator() == 1 && a.numerator() == b;
}
inline bool operator==(std::int64_t b, const rational<std::int64_t>& a) {
  return a == b;
}
inline bool operator==(const rational<std::int64_t>& a, int b) {
  return a == static_cast<std::int64_t>(b);
}
inline bool operator==(int b, const rational<std::int64_t>& a) {
  return a == static_cast<std::int64_t>(b);
}

}  // namespace boost

namespace ltransfer {

// Exact rational in lowest terms with a positive denominator.
using Rational = boost::rational<std::int64_t>;

std::int64_t Floor(const Rational& r);
std::int64_t Ceil(const Rational& r);
bool IsIntegral(const Rational& r);

// "22/5", or "4" when the denominator is one.
std::string ToString(const Rational& r);
// Inverse of ToString. Throws ParseError.
Rational ParseRational(const std::string& text);

std::vector<Rational> ToRational(const std::vector<std::int64_t>& v);

}  // namespace ltransfer

#endif  // LTRANSFER_RATIONAL_H_
