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

#ifndef BIBNLI_ERROR_HPP_
#define BIBNLI_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace bibnli {

// Pipeline stages, in execution order.
enum class Stage {
  kValidation,
  kRecognition,
  kTokenization,
  kSplitting,
  kParsing,
  kSelection,
  kNodes,
  kConnection,
  kOrientation,
  kIntegration,
  kEmission,
  kExecution,
};

std::string_view to_string(Stage stage);

enum class ErrorKind {
  kInvalidQuery,          // empty or otherwise rejected before analysis
  kUnparsableQuery,       // no derivation in the controlled grammar
  kInterpretationFailure, // parse exists but cannot be turned into a graph
  kUnsupportedQuery,      // outside the supported query language
};

std::string_view to_string(ErrorKind kind);

// Raised by every stage of the query pipeline. `token` names the offending
// token when there is one.
class PipelineError : public std::runtime_error {
 public:
  PipelineError(ErrorKind kind, Stage stage, const std::string& message,
                std::string token = {})
      : std::runtime_error(message),
        kind_(kind),
        stage_(stage),
        token_(std::move(token)) {}

  ErrorKind kind() const { return kind_; }
  Stage stage() const { return stage_; }
  const std::string& token() const { return token_; }

 private:
  ErrorKind kind_;
  Stage stage_;
  std::string token_;
};

// Malformed dataset, schema or configuration input.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace bibnli

#endif  // BIBNLI_ERROR_HPP_
