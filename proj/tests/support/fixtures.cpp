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


#include "support/fixtures.hpp"

#include "bibnli/synthetic.hpp"

namespace bibnli::testing {

const Schema& default_schema() {
  static const Schema s = Schema::default_schema();
  return s;
}

const PropertyGraph& desk_graph() {
  static const PropertyGraph g =
      PropertyGraph::build(generate_synthetic(kSeed), default_schema());
  return g;
}

const Dictionary& desk_dictionary() {
  static const Dictionary d = build_dictionary(desk_graph().dictionary_records());
  return d;
}

}  // namespace bibnli::testing
