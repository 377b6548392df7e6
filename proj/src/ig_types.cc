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

#include "igpipe/ig_types.h"

#include <array>
#include <utility>

namespace igpipe {
namespace {

constexpr std::array<std::pair<IGTag, std::string_view>, 17> kTagNames = {{
    {IGTag::kUntagged, "Untagged"},
    {IGTag::kAttribute, "Attribute"},
    {IGTag::kAttributeProp, "AttributeProp"},
    {IGTag::kAim, "Aim"},
    {IGTag::kDeontic, "Deontic"},
    {IGTag::kDirectObject, "DirectObject"},
    {IGTag::kDirectObjectProp, "DirectObjectProp"},
    {IGTag::kIndirectObject, "IndirectObject"},
    {IGTag::kIndirectObjectProp, "IndirectObjectProp"},
    {IGTag::kConstitutedEntity, "ConstitutedEntity"},
    {IGTag::kConstitutedEntityProp, "ConstitutedEntityProp"},
    {IGTag::kConstitutiveFunction, "ConstitutiveFunction"},
    {IGTag::kConstitutingProperties, "ConstitutingProperties"},
    {IGTag::kConstitutingPropertiesProp, "ConstitutingPropertiesProp"},
    {IGTag::kModal, "Modal"},
    {IGTag::kContext, "Context"},
    {IGTag::kObject, "Object"},
}};

}  // namespace

std::string_view StatementTypeName(StatementType type) {
  return type == StatementType::kRegulative ? "regulative" : "constitutive";
}

std::optional<StatementType> ParseStatementType(std::string_view name) {
  if (name == "regulative") return StatementType::kRegulative;
  if (name == "constitutive") return StatementType::kConstitutive;
  return std::nullopt;
}

std::string_view TagName(IGTag tag) {
  for (const auto &[t, name] : kTagNames) {
    if (t == tag) return name;
  }
  return "Untagged";
}

std::optional<IGTag> ParseTag(std::string_view name) {
  for (const auto &[t, n] : kTagNames) {
    if (n == name) return t;
  }
  return std::nullopt;
}

bool TagAllowed(StatementType type, IGTag tag) {
  switch (tag) {
    case IGTag::kUntagged:
    case IGTag::kContext:
      return true;
    case IGTag::kAttribute:
    case IGTag::kAttributeProp:
    case IGTag::kAim:
    case IGTag::kDeontic:
    case IGTag::kDirectObject:
    case IGTag::kDirectObjectProp:
    case IGTag::kIndirectObject:
    case IGTag::kIndirectObjectProp:
      return type == StatementType::kRegulative;
    case IGTag::kConstitutedEntity:
    case IGTag::kConstitutedEntityProp:
    case IGTag::kConstitutiveFunction:
    case IGTag::kConstitutingProperties:
    case IGTag::kConstitutingPropertiesProp:
    case IGTag::kModal:
      return type == StatementType::kConstitutive;
    case IGTag::kObject:
      return false;
  }
  return false;
}

IGTag CollapseTag(IGTag tag) {
  switch (tag) {
    case IGTag::kAttributeProp:
      return IGTag::kAttribute;
    case IGTag::kDirectObject:
    case IGTag::kDirectObjectProp:
    case IGTag::kIndirectObject:
    case IGTag::kIndirectObjectProp:
      return IGTag::kObject;
    case IGTag::kConstitutedEntityProp:
      return IGTag::kConstitutedEntity;
    case IGTag::kConstitutingPropertiesProp:
      return IGTag::kConstitutingProperties;
    default:
      return tag;
  }
}

}  // namespace igpipe
