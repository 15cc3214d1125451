// Copyright 2026 The EnCoD Authors.
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

// Agreement scores between two overlapping covers of the same vertex set.

#ifndef ENCOD_METRICS_HPP_
#define ENCOD_METRICS_HPP_

#include <string>

#include "encod/cover.hpp"

namespace encod {

// Fraction of unordered distinct vertex pairs that are co-members of the
// same number of communities in both covers (no chance correction). Defined
// as 1 for fewer than two vertices.
double omega_index(const OverlapCover& a, const OverlapCover& b);

// Symmetric best-match F1: the mean over communities of a of the best F1
// against b, averaged with the same quantity from b's side. Throws
// InvariantError on an empty community and DomainError on an empty cover.
double fscore(const OverlapCover& a, const OverlapCover& b);

enum class OnmiNormalization {
  // I(X:Y) / max(H(X), H(Y)), the McDaid et al. normalization.
  kMax,
  // 1 - (H(X|Y)/H(X) + H(Y|X)/H(Y)) / 2 with cover-level entropies.
  kConditional,
};

// Overlapping normalized mutual information built from per-community binary
// membership variables, best-match conditional entropies and the usual
// constraint that rejects matches whose agreement terms carry less entropy
// than the disagreement terms. Entropies use log base 2. Returns 1 when the
// covers hold the same communities. The result is clamped to [0, 1].
double onmi(const OverlapCover& a, const OverlapCover& b,
            OnmiNormalization normalization = OnmiNormalization::kMax);

struct MetricReport {
  double onmi = 0.0;
  double onmi_conditional = 0.0;
  double omega = 0.0;
  double fscore = 0.0;
  std::size_t detected_communities = 0;
  std::size_t reference_communities = 0;
};

MetricReport evaluate(const OverlapCover& detected,
                      const OverlapCover& reference);

// `onmi=<v> omega=<v> fscore=<v>` on the first line, then one key=value
// pair per line.
std::string format_report(const MetricReport& report);

}  // namespace encod

#endif  // ENCOD_METRICS_HPP_
