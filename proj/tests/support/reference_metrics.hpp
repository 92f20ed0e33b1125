// Copyright 2026 The cscbench Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CSCBENCH_TESTS_SUPPORT_REFERENCE_METRICS_HPP_
#define CSCBENCH_TESTS_SUPPORT_REFERENCE_METRICS_HPP_

// Naive reference scorer kept deliberately separate from metrics.cpp: it
// builds explicit position sets and counts each quantity in its own loop.

#include <cstddef>
#include <set>
#include <span>
#include <string>

#include "metrics.hpp"

namespace cscbench::testing {

struct RefCounts {
  std::size_t tp = 0, fp = 0, fn = 0, total = 0, exact = 0;
};

struct RefReport {
  RefCounts sd, sc, cd, cc;
};

inline RefReport ReferenceEvaluate(std::span<const EvalInstance> xs) {
  RefReport r;
  for (const auto& x : xs) {
    std::set<std::size_t> gold, pred, fixed;
    for (std::size_t i = 0; i < x.source.size(); ++i) {
      if (x.target[i] != x.source[i]) gold.insert(i);
    }
    for (std::size_t i = 0; i < x.source.size(); ++i) {
      if (x.prediction[i] != x.source[i]) pred.insert(i);
    }
    for (std::size_t i = 0; i < x.source.size(); ++i) {
      if (x.prediction[i] == x.target[i]) fixed.insert(i);
    }
    const std::size_t n = x.source.size();

    // character detection
    r.cd.total += n;
    for (std::size_t i = 0; i < n; ++i) {
      const bool g = gold.count(i) > 0;
      const bool p = pred.count(i) > 0;
      if (g == p) r.cd.exact++;
      if (g && p) r.cd.tp++;
      if (!g && p) r.cd.fp++;
      if (g && !p) r.cd.fn++;
    }
    // character correction
    r.cc.total += n;
    r.cc.exact += fixed.size();
    for (std::size_t i : pred) {
      if (gold.count(i) && fixed.count(i)) {
        r.cc.tp++;
      } else {
        r.cc.fp++;
      }
    }
    for (std::size_t i : gold) {
      if (!(pred.count(i) && fixed.count(i))) r.cc.fn++;
    }
    // sentence detection
    r.sd.total++;
    if (gold == pred) r.sd.exact++;
    if (!gold.empty() && gold == pred) {
      r.sd.tp++;
    } else {
      if (!pred.empty()) r.sd.fp++;
      if (!gold.empty()) r.sd.fn++;
    }
    // sentence correction
    r.sc.total++;
    const bool all_fixed = fixed.size() == n;
    if (all_fixed) r.sc.exact++;
    if (!gold.empty() && all_fixed) r.sc.tp++;
    if (!pred.empty() && !all_fixed) r.sc.fp++;
    if (!gold.empty() && !all_fixed) r.sc.fn++;
  }
  return r;
}

inline bool SameCounts(const RefCounts& ref, const Counts& c) {
  return ref.tp == c.tp && ref.fp == c.fp && ref.fn == c.fn && ref.total == c.total && ref.exact == c.exact_correct;
}

inline bool Matches(const RefReport& ref, const EvalReport& r) {
  return SameCounts(ref.sd, r.sentence_detection.counts) && SameCounts(ref.sc, r.sentence_correction.counts) &&
         SameCounts(ref.cd, r.character_detection.counts) && SameCounts(ref.cc, r.character_correction.counts);
}

}  // namespace cscbench::testing

#endif  // CSCBENCH_TESTS_SUPPORT_REFERENCE_METRICS_HPP_
