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

#include "graph.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "error.h"

namespace zagreb::graph {
namespace {

// Calls emit(i, j) (0-based, i < j) for every present edge of one G(n, p)
// draw, in row-major slot order.
template <typename Emit>
void ForEachGnpEdge(const GnpParams& params, Seed seed, Emit&& emit) {
  params.Validate();
  const std::uint64_t n = params.n;
  if (n < 2) return;
  Rng rng(seed);
  const double log1m_p = std::log1p(-params.p);
  std::uint64_t row = 0;
  std::uint64_t col = 0;  // last visited column of `row`; col == row: none
  for (;;) {
    const std::uint64_t gap = rng.Geometric(log1m_p);
    if (gap == std::numeric_limits<std::uint64_t>::max()) return;
    std::uint64_t advance = gap + 1;
    while (advance > n - 1 - col) {
      advance -= n - 1 - col;
      ++row;
      if (row >= n - 1) return;
      col = row;
    }
    col += advance;
    emit(row, col);
  }
}

}  // namespace

void GnpParams::Validate() const {
  if (n < 1) Fail(ErrorCode::kInvalidArgument, "n must be at least 1");
  if (!(p > 0.0 && p < 1.0)) {
    Fail(ErrorCode::kInvalidArgument, "p must lie strictly between 0 and 1");
  }
}

SimpleGraph::SimpleGraph(std::uint64_t n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)) {
  if (n_ < 1) Fail(ErrorCode::kInvalidArgument, "graph needs n >= 1");
  for (auto& [i, j] : edges_) {
    if (i == j) {
      Fail(ErrorCode::kInvalidArgument,
           "self-loop at vertex " + std::to_string(i));
    }
    if (i > j) std::swap(i, j);
    if (i < 1 || j > n_) {
      Fail(ErrorCode::kInvalidArgument,
           "edge (" + std::to_string(i) + ", " + std::to_string(j) +
               ") outside vertex set 1.." + std::to_string(n_));
    }
  }
  std::sort(edges_.begin(), edges_.end());
  const auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    Fail(ErrorCode::kInvalidArgument,
         "duplicate edge (" + std::to_string(dup->first) + ", " +
             std::to_string(dup->second) + ")");
  }
}

SimpleGraph SimpleGraph::Empty(std::uint64_t n) { return SimpleGraph(n, {}); }

SimpleGraph SimpleGraph::Complete(std::uint64_t n) {
  std::vector<Edge> edges;
  for (std::uint64_t i = 1; i <= n; ++i) {
    for (std::uint64_t j = i + 1; j <= n; ++j) edges.emplace_back(i, j);
  }
  return SimpleGraph(n, std::move(edges));
}

DegreeSequence::DegreeSequence(std::uint64_t n,
                               std::vector<std::uint64_t> degrees)
    : n_(n), degrees_(std::move(degrees)) {
  if (n_ < 1 || degrees_.size() != n_) {
    Fail(ErrorCode::kInvalidArgument,
         "degree sequence length must equal n >= 1");
  }
  std::uint64_t parity = 0;
  for (auto d : degrees_) {
    if (d > n_ - 1) {
      Fail(ErrorCode::kInvalidArgument,
           "degree " + std::to_string(d) + " exceeds n - 1");
    }
    parity ^= d & 1U;
  }
  if (parity != 0) Fail(ErrorCode::kInvalidArgument, "degree sum is odd");
}

DegreeSequence SampleGnpDegrees(const GnpParams& params, Seed seed) {
  std::vector<std::uint64_t> degrees(params.n, 0);
  ForEachGnpEdge(params, seed, [&](std::uint64_t i, std::uint64_t j) {
    ++degrees[i];
    ++degrees[j];
  });
  return DegreeSequence(DegreeSequence::Trusted{}, params.n,
                        std::move(degrees));
}

SimpleGraph SampleGnpGraph(const GnpParams& params, Seed seed,
                           std::uint64_t max_vertices) {
  if (params.n > max_vertices) {
    Fail(ErrorCode::kSizeGuard, "refusing to materialise a graph with n = " +
                                    std::to_string(params.n) + " > " +
                                    std::to_string(max_vertices));
  }
  std::vector<Edge> edges;
  ForEachGnpEdge(params, seed, [&](std::uint64_t i, std::uint64_t j) {
    edges.emplace_back(i + 1, j + 1);
  });
  // Row-major emission is already sorted and duplicate-free.
  return SimpleGraph(SimpleGraph::Trusted{}, params.n, std::move(edges));
}

SimpleGraph ReadEdgeList(std::istream& in,
                         std::optional<std::uint64_t> n_override) {
  std::vector<Edge> edges;
  std::vector<long> line_of;
  std::uint64_t max_label = 0;
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::string a, b, extra;
    fields >> a >> b;
    const auto parse_label = [&](const std::string& tok) -> std::uint64_t {
      if (tok.empty() ||
          tok.find_first_not_of("0123456789") != std::string::npos) {
        throw ParseError("line " + std::to_string(line_no) +
                             ": expected two positive integer labels",
                         line_no, -1);
      }
      std::uint64_t v = 0;
      try {
        v = std::stoull(tok);
      } catch (const std::exception&) {
        throw ParseError(
            "line " + std::to_string(line_no) + ": label out of range",
            line_no, -1);
      }
      if (v == 0) {
        throw ParseError(
            "line " + std::to_string(line_no) + ": labels are 1-based",
            line_no, -1);
      }
      return v;
    };
    const std::uint64_t i = parse_label(a);
    const std::uint64_t j = parse_label(b);
    if (fields >> extra) {
      throw ParseError("line " + std::to_string(line_no) +
                           ": unexpected token '" + extra + "'",
                       line_no, -1);
    }
    if (i == j) {
      throw ParseError("line " + std::to_string(line_no) + ": self-loop at " +
                           std::to_string(i),
                       line_no, -1);
    }
    edges.emplace_back(std::min(i, j), std::max(i, j));
    line_of.push_back(line_no);
    max_label = std::max({max_label, i, j});
  }
  if (in.bad()) Fail(ErrorCode::kIo, "read error in edge list");

  std::vector<std::size_t> order(edges.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::stable_sort(order.begin(), order.end(), [&](auto x, auto y) {
    return edges[x] < edges[y];
  });
  for (std::size_t k = 1; k < order.size(); ++k) {
    if (edges[order[k]] == edges[order[k - 1]]) {
      const long at = line_of[order[k]];
      throw ParseError("line " + std::to_string(at) + ": duplicate edge (" +
                           std::to_string(edges[order[k]].first) + ", " +
                           std::to_string(edges[order[k]].second) + ")",
                       at, -1);
    }
  }

  std::uint64_t n = max_label;
  if (n_override) {
    if (*n_override < max_label) {
      Fail(ErrorCode::kInvalidArgument,
           "declared n = " + std::to_string(*n_override) +
               " is below the largest label " + std::to_string(max_label));
    }
    n = *n_override;
  }
  if (n == 0) {
    Fail(ErrorCode::kInvalidArgument,
         "edge list is empty; declare the vertex count explicitly");
  }
  return SimpleGraph(n, std::move(edges));
}

DegreeSequence DegreesOf(const SimpleGraph& g) {
  std::vector<std::uint64_t> degrees(g.vertex_count(), 0);
  for (const auto& [i, j] : g.edges()) {
    ++degrees[i - 1];
    ++degrees[j - 1];
  }
  return DegreeSequence(DegreeSequence::Trusted{}, g.vertex_count(),
                        std::move(degrees));
}

DegreeSequence ComplementDegrees(const DegreeSequence& d) {
  std::vector<std::uint64_t> out(d.degrees().begin(), d.degrees().end());
  for (auto& v : out) v = d.vertex_count() - 1 - v;
  return DegreeSequence(DegreeSequence::Trusted{}, d.vertex_count(),
                        std::move(out));
}

}  // namespace zagreb::graph
