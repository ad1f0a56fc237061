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

#include "ltransfer/rational.h"

#include <charconv>

#include "ltransfer/errors.h"

namespace ltransfer {

std::int64_t Floor(const Rational& r) {
  std::int64_t q = r.numerator() / r.denominator();
  if (r.numerator() % r.denominator() != 0 && r.numerator() < 0) --q;
  return q;
}

std::int64_t Ceil(const Rational& r) {
  std::int64_t q = r.numerator() / r.denominator();
  if (r.numerator() % r.denominator() != 0 && r.numerator() > 0) ++q;
  return q;
}

bool IsIntegral(const Rational& r) { return r.denominator() == 1; }

std::string ToString(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" +
         std::to_string(r.denominator());
}

namespace {

std::int64_t ParseInt(std::string_view s, const std::string& whole) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw ParseError("malformed rational '" + whole + "'");
  }
  return v;
}

}  // namespace

Rational ParseRational(const std::string& text) {
  std::string_view sv(text);
  auto slash = sv.find('/');
  if (slash == std::string_view::npos) return Rational(ParseInt(sv, text));
  std::int64_t num = ParseInt(sv.substr(0, slash), text);
  std::int64_t den = ParseInt(sv.substr(slash + 1), text);
  if (den == 0) throw ParseError("zero denominator in '" + text + "'");
  return Rational(num, den);
}

std::vector<Rational> ToRational(const std::vector<std::int64_t>& v) {
  return {v.begin(), v.end()};
}

}  // namespace ltransfer
