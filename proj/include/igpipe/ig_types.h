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

// Institutional Grammar component labels and statement types.

#ifndef IGPIPE_IG_TYPES_H_
#define IGPIPE_IG_TYPES_H_

#include <optional>
#include <string>
#include <string_view>

namespace igpipe {

enum class StatementType { kRegulative, kConstitutive };

enum class IGTag {
  kUntagged,
  // Regulative.
  kAttribute,
  kAttributeProp,
  kAim,
  kDeontic,
  kDirectObject,
  kDirectObjectProp,
  kIndirectObject,
  kIndirectObjectProp,
  // Constitutive.
  kConstitutedEntity,
  kConstitutedEntityProp,
  kConstitutiveFunction,
  kConstitutingProperties,
  kConstitutingPropertiesProp,
  kModal,
  // Both sets. Activation conditions and execution constraints share it.
  kContext,
  // Evaluation only: direct and indirect objects after collapsing.
  kObject,
};

std::string_view StatementTypeName(StatementType type);
std::optional<StatementType> ParseStatementType(std::string_view name);

std::string_view TagName(IGTag tag);
std::optional<IGTag> ParseTag(std::string_view name);

// True when |tag| belongs to the tag set of |type| (Untagged and Context
// belong to both).
bool TagAllowed(StatementType type, IGTag tag);

// Maps property tags onto their component and both object kinds onto Object,
// the granularity at which tagger output is scored. Idempotent.
IGTag CollapseTag(IGTag tag);

}  // namespace igpipe

#endif  // IGPIPE_IG_TYPES_H_
