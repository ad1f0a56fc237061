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

#include "ltransfer/generator.h"

#include <random>
#include <stdexcept>
#include <string>

namespace ltransfer {
namespace {

// std distributions are implementation-defined; map raw engine output
// ourselves so documents are reproducible across standard libraries.
class Draw {
 public:
  explicit Draw(std::uint64_t seed) : engine_(seed) {}

  std::int64_t Uniform(std::int64_t lo, std::int64_t hi) {
    auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<std::int64_t>(engine_() % span);
  }
  bool Bernoulli(double p) {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53 < p;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace

RawInstance GenerateInstance(const GeneratorOptions& options) {
  if (options.surplus < 1 || options.deficit < 1 || options.teachers < 0 ||
      options.max_alpha < 1 || options.max_beta < 1 ||
      options.accept_prob <= 0 || options.accept_prob > 1) {
    throw std::invalid_argument("generator options out of range");
  }
  Draw draw(options.seed);
  RawInstance raw;
  for (int j = 0; j < options.surplus; ++j) {
    raw.surplus_schools.push_back(
        {"s" + std::to_string(j + 1), draw.Uniform(1, options.max_alpha)});
  }
  for (int k = 0; k < options.deficit; ++k) {
    raw.deficit_schools.push_back(
        {"d" + std::to_string(k + 1), draw.Uniform(1, options.max_beta)});
  }
  for (int i = 0; i < options.teachers; ++i) {
    RawInstance::Teacher t;
    t.id = "t" + std::to_string(i + 1);
    t.origin = raw.surplus_schools[draw.Uniform(0, options.surplus - 1)].id;
    while (t.acceptable.empty()) {
      for (const auto& d : raw.deficit_schools) {
        if (draw.Bernoulli(options.accept_prob)) t.acceptable.push_back(d.id);
      }
    }
    raw.teachers.push_back(std::move(t));
  }
  return raw;
}

RawInstance GenerateBoundedInstance(std::uint64_t seed, int max_surplus,
                                    int max_deficit, int max_teachers,
                                    int max_alpha, int max_beta,
                                    double accept_prob) {
  Draw draw(seed ^ 0x5DEECE66DULL);
  GeneratorOptions options;
  options.seed = seed;
  options.surplus = static_cast<int>(draw.Uniform(1, max_surplus));
  options.deficit = static_cast<int>(draw.Uniform(1, max_deficit));
  options.teachers = static_cast<int>(draw.Uniform(1, max_teachers));
  options.max_alpha = max_alpha;
  options.max_beta = max_beta;
  options.accept_prob = accept_prob;
  return GenerateInstance(options);
}

}  // namespace ltransfer
