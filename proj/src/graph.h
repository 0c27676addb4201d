// Copyright 2026 The Zagreb Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Simple graphs on the vertex set {1, ..., n}, degree sequences, and
// G(n, p) samplers.

#ifndef ZAGREB_GRAPH_H_
#define ZAGREB_GRAPH_H_

#include <cstdint>
#include <istream>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "rng.h"

namespace zagreb::graph {

struct GnpParams {
  std::uint64_t n = 1;
  double p = 0.5;

  // Throws kInvalidArgument unless n >= 1 and 0 < p < 1.
  void Validate() const;
};

// Unordered edge stored as (i, j) with 1 <= i < j <= n.
using Edge = std::pair<std::uint64_t, std::uint64_t>;

class SimpleGraph {
 public:
  // Validates labels, rejects self-loops and duplicates (in either
  // orientation), and stores edges sorted.
  SimpleGraph(std::uint64_t n, std::vector<Edge> edges);

  static SimpleGraph Empty(std::uint64_t n);
  static SimpleGraph Complete(std::uint64_t n);

  std::uint64_t vertex_count() const { return n_; }
  std::uint64_t edge_count() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }

 private:
  struct Trusted {};
  SimpleGraph(Trusted, std::uint64_t n, std::vector<Edge> edges)
      : n_(n), edges_(std::move(edges)) {}

  friend SimpleGraph SampleGnpGraph(const GnpParams&, Seed, std::uint64_t);

  std::uint64_t n_;
  std::vector<Edge> edges_;
};

class DegreeSequence {
 public:
  // Throws kInvalidArgument if length != n, some d_i > n - 1, or the sum
  // is odd.
  DegreeSequence(std::uint64_t n, std::vector<std::uint64_t> degrees);

  std::uint64_t vertex_count() const { return n_; }
  std::span<const std::uint64_t> degrees() const { return degrees_; }
  std::uint64_t operator[](std::size_t i) const { return degrees_[i]; }

  friend bool operator==(const DegreeSequence&,
                         const DegreeSequence&) = default;

 private:
  struct Trusted {};
  DegreeSequence(Trusted, std::uint64_t n, std::vector<std::uint64_t> d)
      : n_(n), degrees_(std::move(d)) {}

  friend DegreeSequence SampleGnpDegrees(const GnpParams&, Seed);
  friend DegreeSequence DegreesOf(const SimpleGraph&);
  friend DegreeSequence ComplementDegrees(const DegreeSequence&);

  std::uint64_t n_;
  std::vector<std::uint64_t> degrees_;
};

inline constexpr std::uint64_t kDefaultMaxSampledVertices = 100000;

// Degree sequence of one G(n, p) draw. Edge slots (i < j, row-major) are
// visited by geometric skips, so time is O(n + edges) and memory O(n).
DegreeSequence SampleGnpDegrees(const GnpParams& params, Seed seed);

// Same slot stream as SampleGnpDegrees, materialising the edges.
SimpleGraph SampleGnpGraph(
    const GnpParams& params, Seed seed,
    std::uint64_t max_vertices = kDefaultMaxSampledVertices);

// Text edge list: one "i j" per line, 1-based, '#' starts a comment line.
// n is the largest label unless `n_override` is given (it may only grow n).
SimpleGraph ReadEdgeList(std::istream& in,
                         std::optional<std::uint64_t> n_override = {});

DegreeSequence DegreesOf(const SimpleGraph& g);

// d_i -> n - 1 - d_i, the degrees of the complement graph.
DegreeSequence ComplementDegrees(const DegreeSequence& d);

}  // namespace zagreb::graph

#endif  // ZAGREB_GRAPH_H_
