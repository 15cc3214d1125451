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

#include "encod/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "encod/errors.hpp"
#include "encod/text_io.hpp"

namespace encod {

namespace {

void require_same_universe(const OverlapCover& a, const OverlapCover& b) {
  if (a.num_vertices() != b.num_vertices()) {
    throw DomainError("covers are defined over different vertex sets");
  }
}

// Intersection sizes of every community of `a` with every community of `b`,
// row-major |a| x |b|.
std::vector<std::size_t> overlap_counts(const OverlapCover& a,
                                        const OverlapCover& b) {
  std::vector<std::size_t> counts(a.size() * b.size(), 0);
  for (std::size_t k = 0; k < a.size(); ++k) {
    std::size_t* row = counts.data() + k * b.size();
    for (VertexId v : a.community(k)) {
      for (std::uint32_t l : b.memberships(v)) ++row[l];
    }
  }
  return counts;
}

double h(double p) { return p > 0.0 ? -p * std::log2(p) : 0.0; }

double binary_entropy(double p) { return h(p) + h(1.0 - p); }

// Sum over communities X of a of min over Y in b of H(X | Y).
double conditional_entropy(const OverlapCover& a, const OverlapCover& b,
                           const std::vector<std::size_t>& counts,
                           bool a_is_rows) {
  const double n = static_cast<double>(a.num_vertices());
  double total = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double size_x = static_cast<double>(a.community(k).size());
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t l = 0; l < b.size(); ++l) {
      const double size_y = static_cast<double>(b.community(l).size());
      const double both = static_cast<double>(
          a_is_rows ? counts[k * b.size() + l] : counts[l * a.size() + k]);
      const double pd = both / n;
      const double pc = (size_x - both) / n;
      const double pb = (size_y - both) / n;
      const double pa = (n - size_x - size_y + both) / n;
      double value;
      if (h(pa) + h(pd) > h(pb) + h(pc)) {
        value = h(pa) + h(pb) + h(pc) + h(pd) - binary_entropy(size_y / n);
      } else {
        value = binary_entropy(size_x / n);
      }
      best = std::min(best, value);
    }
    total += best;
  }
  return total;
}

double cover_entropy(const OverlapCover& a) {
  const double n = static_cast<double>(a.num_vertices());
  double total = 0.0;
  for (const auto& c : a.communities()) {
    total += binary_entropy(static_cast<double>(c.size()) / n);
  }
  return total;
}

}  // namespace

double omega_index(const OverlapCover& a, const OverlapCover& b) {
  require_same_universe(a, b);
  const std::size_t n = a.num_vertices();
  if (n < 2) return 1.0;
  std::vector<std::uint32_t> shared_a(n, 0);
  std::vector<std::uint32_t> shared_b(n, 0);
  std::vector<VertexId> touched;
  std::uint64_t disagree = 0;
  auto count = [&](const OverlapCover& cover, VertexId u,
                   std::vector<std::uint32_t>& shared) {
    for (std::uint32_t j : cover.memberships(u)) {
      const auto members = cover.community(j);
      for (auto it = std::upper_bound(members.begin(), members.end(), u);
           it != members.end(); ++it) {
        if (shared_a[*it] == 0 && shared_b[*it] == 0) touched.push_back(*it);
        ++shared[*it];
      }
    }
  };
  for (VertexId u = 0; u < n; ++u) {
    touched.clear();
    count(a, u, shared_a);
    count(b, u, shared_b);
    for (VertexId v : touched) {
      if (shared_a[v] != shared_b[v]) ++disagree;
      shared_a[v] = 0;
      shared_b[v] = 0;
    }
  }
  const std::uint64_t pairs =
      static_cast<std::uint64_t>(n) * (n - 1) / 2;
  return static_cast<double>(pairs - disagree) / static_cast<double>(pairs);
}

double fscore(const OverlapCover& a, const OverlapCover& b) {
  require_same_universe(a, b);
  if (a.size() == 0 || b.size() == 0) {
    throw DomainError("fscore needs two non-empty covers");
  }
  for (const OverlapCover* cover : {&a, &b}) {
    for (const auto& c : cover->communities()) {
      if (c.empty()) throw InvariantError("fscore: empty community");
    }
  }
  const auto counts = overlap_counts(a, b);
  std::vector<double> best_a(a.size(), 0.0);
  std::vector<double> best_b(b.size(), 0.0);
  for (std::size_t k = 0; k < a.size(); ++k) {
    for (std::size_t l = 0; l < b.size(); ++l) {
      const double both = static_cast<double>(counts[k * b.size() + l]);
      const double f1 =
          2.0 * both /
          static_cast<double>(a.community(k).size() + b.community(l).size());
      best_a[k] = std::max(best_a[k], f1);
      best_b[l] = std::max(best_b[l], f1);
    }
  }
  double sum_a = 0.0;
  for (double x : best_a) sum_a += x;
  double sum_b = 0.0;
  for (double x : best_b) sum_b += x;
  return 0.5 * (sum_a / static_cast<double>(a.size()) +
                sum_b / static_cast<double>(b.size()));
}

double onmi(const OverlapCover& a, const OverlapCover& b,
            OnmiNormalization normalization) {
  require_same_universe(a, b);
  if (a.size() == 0 || b.size() == 0) {
    throw DomainError("onmi needs two non-empty covers");
  }
  if (a.canonical() == b.canonical()) return 1.0;
  const double hx = cover_entropy(a);
  const double hy = cover_entropy(b);
  if (hx == 0.0 || hy == 0.0) return 0.0;

  const auto counts = overlap_counts(a, b);
  const double hxy = conditional_entropy(a, b, counts, true);
  const double hyx = conditional_entropy(b, a, counts, false);
  double value;
  if (normalization == OnmiNormalization::kMax) {
    value = 0.5 * (hx - hxy + hy - hyx) / std::max(hx, hy);
  } else {
    value = 1.0 - 0.5 * (hxy / hx + hyx / hy);
  }
  return std::clamp(value, 0.0, 1.0);
}

MetricReport evaluate(const OverlapCover& detected,
                      const OverlapCover& reference) {
  MetricReport report;
  report.onmi = onmi(detected, reference, OnmiNormalization::kMax);
  report.onmi_conditional =
      onmi(detected, reference, OnmiNormalization::kConditional);
  report.omega = omega_index(detected, reference);
  report.fscore = fscore(detected, reference);
  report.detected_communities = detected.size();
  report.reference_communities = reference.size();
  return report;
}

std::string format_report(const MetricReport& report) {
  std::string out = "onmi=" + format_real(report.onmi) +
                    " omega=" + format_real(report.omega) +
                    " fscore=" + format_real(report.fscore) + "\n";
  out += "onmi=" + format_real(report.onmi) + "\n";
  out += "onmi_lfk=" + format_real(report.onmi_conditional) + "\n";
  out += "omega=" + format_real(report.omega) + "\n";
  out += "fscore=" + format_real(report.fscore) + "\n";
  out += "detected_communities=" + std::to_string(report.detected_communities) +
         "\n";
  out += "reference_communities=" +
         std::to_string(report.reference_communities) + "\n";
  return out;
}

}  // namespace encod
