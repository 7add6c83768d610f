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

#include "bibnli/entity.hpp"

#include <cctype>

#include "bibnli/error.hpp"

namespace bibnli {

std::string_view to_string(EntityType type) {
  switch (type) {
    case EntityType::kPaper:
      return "Paper";
    case EntityType::kAuthor:
      return "Author";
    case EntityType::kTerm:
      return "Term";
    case EntityType::kSource:
      return "Source";
    case EntityType::kOrganization:
      return "Organization";
  }
  return "?";
}

std::optional<EntityType> parse_entity_type(std::string_view name) {
  for (EntityType type : kAllEntityTypes) {
    std::string_view canonical = to_string(type);
    if (name.size() != canonical.size()) continue;
    bool same = true;
    for (std::size_t i = 0; i < name.size(); ++i) {
      if (std::tolower(static_cast<unsigned char>(name[i])) !=
          std::tolower(static_cast<unsigned char>(canonical[i]))) {
        same = false;
        break;
      }
    }
    if (same) return type;
  }
  return std::nullopt;
}

std::string_view to_string(Stage stage) {
  switch (stage) {
    case Stage::kValidation:
      return "validation";
    case Stage::kRecognition:
      return "recognition";
    case Stage::kTokenization:
      return "tokenization";
    case Stage::kSplitting:
      return "splitting";
    case Stage::kParsing:
      return "parsing";
    case Stage::kSelection:
      return "selection";
    case Stage::kNodes:
      return "nodes";
    case Stage::kConnection:
      return "connection";
    case Stage::kOrientation:
      return "orientation";
    case Stage::kIntegration:
      return "integration";
    case Stage::kEmission:
      return "emission";
    case Stage::kExecution:
      return "execution";
  }
  return "?";
}

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidQuery:
      return "InvalidQuery";
    case ErrorKind::kUnparsableQuery:
      return "UnparsableQuery";
    case ErrorKind::kInterpretationFailure:
      return "InterpretationFailure";
    case ErrorKind::kUnsupportedQuery:
      return "UnsupportedQuery";
  }
  return "?";
}

}  // namespace bibnli
