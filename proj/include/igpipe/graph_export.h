// Copyright 2026 The igpipe Authors.
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

// Hypergraph serializations: GraphML (bipartite statement-entity graph), DOT
// (two-section projection) and JSON incidence lists.

#ifndef IGPIPE_GRAPH_EXPORT_H_
#define IGPIPE_GRAPH_EXPORT_H_

#include <string>

#include "igpipe/hypergraph.h"
#include "igpipe/metrics.h"

namespace igpipe {

std::string HypergraphToGraphML(const Hypergraph &h);
std::string TwoSectionToDot(const SimpleGraph &g);
std::string HypergraphToJson(const Hypergraph &h);

}  // namespace igpipe

#endif  // IGPIPE_GRAPH_EXPORT_H_
