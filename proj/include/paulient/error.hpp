// Copyright 2026 The paulient Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace paulient {

/// Base class of every error raised by the library. `kind()` is a stable
/// identifier used by the CLI and the tests to tell failure modes apart.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define PAULIENT_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                         \
   public:                                                            \
    explicit Name(const std::string& what) : Error(#Name, what) {}    \
  }

PAULIENT_DEFINE_ERROR(DimensionMismatch);
PAULIENT_DEFINE_ERROR(SizeLimitExceeded);
PAULIENT_DEFINE_ERROR(NotUnitary);
PAULIENT_DEFINE_ERROR(NotHermitian);
PAULIENT_DEFINE_ERROR(NotNormalized);
PAULIENT_DEFINE_ERROR(InvalidArgument);
PAULIENT_DEFINE_ERROR(InvalidGeneratorImages);
PAULIENT_DEFINE_ERROR(NotProduct);
PAULIENT_DEFINE_ERROR(NotProductPreserving);
PAULIENT_DEFINE_ERROR(FactorizationDegenerate);
PAULIENT_DEFINE_ERROR(NotUnitaryClosure);
PAULIENT_DEFINE_ERROR(DegenerateLeadingEigenvalue);
PAULIENT_DEFINE_ERROR(ParseError);
PAULIENT_DEFINE_ERROR(ConfigError);

#undef PAULIENT_DEFINE_ERROR

}  // namespace paulient
