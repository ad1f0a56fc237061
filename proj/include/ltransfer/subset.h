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

#ifndef LTRANSFER_SUBSET_H_
#define LTRANSFER_SUBSET_H_

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace ltransfer {

// Subset of sinks (deficit schools) as a bitmask over sink indices.
using SinkMask = std::uint64_t;

inline constexpr int kMaxMaskBits = 63;

inline constexpr SinkMask FullMask(int n) {
  return n >= 64 ? ~SinkMask{0} : (SinkMask{1} << n) - 1;
}
inline constexpr bool Contains(SinkMask m, int i) { return (m >> i) & 1U; }
inline constexpr SinkMask Bit(int i) { return SinkMask{1} << i; }
inline int Cardinality(SinkMask m) { return std::popcount(m); }

inline std::vector<int> Members(SinkMask m) {
  std::vector<int> out;
  for (int i = 0; m != 0; ++i, m >>= 1) {
    if (m & 1U) out.push_back(i);
  }
  return out;
}

inline SinkMask MaskOf(const std::vector<int>& members) {
  SinkMask m = 0;
  for (int i : members) m |= Bit(i);
  return m;
}

// "{d3,d4,d5}" using the given labels.
inline std::string FormatSubset(SinkMask m,
                                const std::vector<std::string>& labels) {
  std::string out = "{";
  bool first = true;
  for (int i : Members(m)) {
    if (!first) out += ",";
    out += i < static_cast<int>(labels.size()) ? labels[i]
                                               : std::to_string(i);
    first = false;
  }
  return out + "}";
}

}  // namespace ltransfer

#endif  // LTRANSFER_SUBSET_H_
