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

// Generalized Zagreb indices Z^(k) = sum_i d_i^k and star counts
// S_{m+1} = sum_i C(d_i, m), both as exact functionals of the degree
// sequence, and the lower-triangular transform Z = A_k S.

#ifndef ZAGREB_INDICES_H_
#define ZAGREB_INDICES_H_

#include <vector>

#include "exact_int.h"
#include "graph.h"

namespace zagreb::indices {

// values[m - 1] = Z^(m) for m = 1..k.
struct IndexVector {
  unsigned k = 0;
  ExactVector values;
};

// values[m - 1] = S_{m+1} (stars with m leaves) for m = 1..k. 2-stars are
// counted once per orientation, so S_2 = 2|E|.
struct StarVector {
  unsigned k = 0;
  ExactVector values;
};

// entries[m-1][l-1] = l! {m l} for m >= l, zero above the diagonal.
struct TransformMatrix {
  unsigned k = 0;
  std::vector<ExactVector> entries;

  ExactVector Apply(const ExactVector& stars) const;
};

ExactInt ZagrebIndex(const graph::DegreeSequence& d, unsigned k);
IndexVector ZagrebVector(const graph::DegreeSequence& d, unsigned k);

// Number of stars on `star_size` vertices (star_size >= 2).
ExactInt StarCount(const graph::DegreeSequence& d, unsigned star_size);
StarVector StarVectorOf(const graph::DegreeSequence& d, unsigned k);

TransformMatrix Transform(unsigned k);

struct IdentityReport {
  bool holds = false;
  ExactVector lhs;
  ExactVector rhs;
};

// Z^(1..k) against A_k S, entrywise.
IdentityReport CheckStarIdentity(const graph::DegreeSequence& d, unsigned k);

// Z^(j) against n(n-1)^j + sum_m (-1)^m C(j,m) (n-1)^(j-m) Zc^(m) for
// j = 1..k, where Zc are the indices of the complement graph.
IdentityReport CheckComplementIdentity(const graph::DegreeSequence& d,
                                       unsigned k);

}  // namespace zagreb::indices

#endif  // ZAGREB_INDICES_H_
