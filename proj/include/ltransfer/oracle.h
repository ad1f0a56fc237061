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

#ifndef LTRANSFER_ORACLE_H_
#define LTRANSFER_ORACLE_H_

#include <cstdint>
#include <functional>
#include <vector>

#include "ltransfer/instance.h"
#include "ltransfer/rational.h"
#include "ltransfer/specialization.h"
#include "ltransfer/subset.h"

// Brute-force ground truth. Nothing here touches the flow code: feasibility
// and deficits are recomputed from the model constraints directly.
namespace ltransfer::oracle {

// Weak majorization: sort both descending; every prefix sum of `g` is at
// most the matching prefix sum of `g_prime`. Throws std::invalid_argument on
// a dimension mismatch.
bool LorenzDominates(const std::vector<Rational>& g,
                     const std::vector<Rational>& g_prime);
bool LorenzDominates(const std::vector<std::int64_t>& g,
                     const std::vector<std::int64_t>& g_prime);

std::vector<std::int64_t> SortedDescending(std::vector<std::int64_t> v);

struct EnumerationOptions {
  // Refuse when the product of per-teacher option counts exceeds this.
  std::uint64_t max_product = 10'000'000;
  // Allow moves to acceptable surplus schools (extended model).
  bool surplus_moves = false;
};

// Per-teacher reported acceptable deficit schools (indices). An empty report
// pins the teacher at its origin.
using Profile = std::vector<std::vector<int>>;

Profile TruthfulProfile(const Instance& instance);

using TransferVisitor = std::function<void(
    const Transfer& transfer, const std::vector<std::int64_t>& deficits)>;

// Visits every feasible transfer with its deficit vector, in ascending
// tie-break order: teachers compared in index order, destinations ranked by
// deficit-school index, then surplus-school index, with staying last. Throws
// CapExceededError over the cap.
void EnumerateTransfers(const Instance& instance, const Profile& profile,
                        const TransferVisitor& visit,
                        const EnumerationOptions& options = {});
void EnumerateTransfers(const Instance& instance, const TransferVisitor& visit,
                        const EnumerationOptions& options = {});

std::uint64_t CountTransfers(const Instance& instance,
                             const EnumerationOptions& options = {});

struct DominantSet {
  std::vector<std::int64_t> sorted;   // descending
  std::vector<Transfer> witnesses;    // in enumeration order
  std::vector<std::vector<std::int64_t>> witness_deficits;
  std::uint64_t num_feasible = 0;
};

// All transfers whose deficit vector Lorenz-dominates every feasible one.
// Throws DefectError if none exists.
DominantSet BruteForceLorenzDominant(const Instance& instance,
                                     const Profile& profile,
                                     const EnumerationOptions& options = {});
DominantSet BruteForceLorenzDominant(const Instance& instance,
                                     const EnumerationOptions& options = {});

// Maximum number of teachers any feasible transfer sends into `sinks`.
std::int64_t BruteForceV(const Instance& instance, SinkMask sinks,
                         const EnumerationOptions& options = {});

// Every distinct deficit vector produced by a feasible transfer.
std::vector<std::vector<std::int64_t>> AchievableDeficitVectors(
    const Instance& instance, const EnumerationOptions& options = {});

// Typed model: sorted deficits over the sink slots of the instance, by brute
// force over each transferable teacher's reachable slots.
std::vector<std::int64_t> BruteForceTypedLorenzDominant(
    const TypedInstance& instance, std::uint64_t max_product = 10'000'000);

}  // namespace ltransfer::oracle

#endif  // LTRANSFER_ORACLE_H_
