// Copyright 2026 The bibnli Authors.
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


// Deterministic synthetic bibliographic datasets. Every entity named by the
// suite queries is present and wired so each query has an answer; the
// remaining entities and edges are random.

#ifndef BIBNLI_SYNTHETIC_HPP_
#define BIBNLI_SYNTHETIC_HPP_

#include <cstddef>
#include <cstdint>

#include "bibnli/graph_store.hpp"

namespace bibnli {

// Random entities added on top of the required ones.
struct SyntheticSizes {
  std::size_t papers = 0;
  std::size_t authors = 0;
  std::size_t terms = 0;
  std::size_t sources = 0;
  std::size_t organizations = 0;

  // Extras bringing the totals to about 630 papers, 596 authors, 291 terms,
  // 13 sources and 10 organizations.
  static SyntheticSizes desk_scale();
};

Dataset generate_synthetic(std::uint64_t seed,
                           const SyntheticSizes& extras =
                               SyntheticSizes::desk_scale());

// Number of required entities per type, independent of the seed.
SyntheticSizes required_sizes();

}  // namespace bibnli

#endif  // BIBNLI_SYNTHETIC_HPP_
