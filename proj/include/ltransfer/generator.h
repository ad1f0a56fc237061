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

#ifndef LTRANSFER_GENERATOR_H_
#define LTRANSFER_GENERATOR_H_

#include <cstdint>

#include "ltransfer/instance.h"

namespace ltransfer {

struct GeneratorOptions {
  std::uint64_t seed = 0;
  int surplus = 3;
  int deficit = 4;
  int teachers = 6;
  int max_alpha = 3;
  int max_beta = 4;
  double accept_prob = 0.5;
};

// Deterministic random instance: alpha and beta uniform in [1, max], origins
// uniform, each deficit school acceptable with `accept_prob`, redrawn until
// nonempty. Same options, same document, on every platform.
RawInstance GenerateInstance(const GeneratorOptions& options);

// Draws the sizes themselves uniformly from [1, max_*] before generating.
RawInstance GenerateBoundedInstance(std::uint64_t seed, int max_surplus,
                                    int max_deficit, int max_teachers,
                                    int max_alpha, int max_beta,
                                    double accept_prob = 0.5);

}  // namespace ltransfer

#endif  // LTRANSFER_GENERATOR_H_
