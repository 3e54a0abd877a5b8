// Copyright 2026 The povmcoh authors
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

#ifndef POVMCOH_ERRORS_HPP
#define POVMCOH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace povmcoh {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad or malformed input: wrong shapes, failed validation, unparsable files.
// The CLI maps these to exit code 1.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A computation that should have succeeded on valid input did not, or a
// mathematical identity that must hold came out false. The CLI maps these
// to exit code 2.
class NumericalError : public Error {
 public:
  using Error::Error;
};

#define POVMCOH_DEFINE_ERROR(NAME, BASE)  \
  class NAME : public BASE {              \
   public:                                \
    using BASE::BASE;                     \
  }

POVMCOH_DEFINE_ERROR(DimensionMismatch, ValidationError);
POVMCOH_DEFINE_ERROR(NotFinite, ValidationError);
POVMCOH_DEFINE_ERROR(NonHermitian, ValidationError);
POVMCOH_DEFINE_ERROR(NotPSD, ValidationError);
POVMCOH_DEFINE_ERROR(NotUnitTrace, ValidationError);
POVMCOH_DEFINE_ERROR(NotDistribution, ValidationError);
POVMCOH_DEFINE_ERROR(NotComplete, ValidationError);
POVMCOH_DEFINE_ERROR(NotIdempotent, ValidationError);
POVMCOH_DEFINE_ERROR(NotOrthogonal, ValidationError);
POVMCOH_DEFINE_ERROR(NotRankOne, ValidationError);
POVMCOH_DEFINE_ERROR(NotPrime, ValidationError);
POVMCOH_DEFINE_ERROR(NotAncillaStructured, ValidationError);
POVMCOH_DEFINE_ERROR(TargetTooSmall, ValidationError);
POVMCOH_DEFINE_ERROR(BadSubsystemIndex, ValidationError);
POVMCOH_DEFINE_ERROR(ParseError, ValidationError);

POVMCOH_DEFINE_ERROR(NoConvergence, NumericalError);
POVMCOH_DEFINE_ERROR(CompletionFailure, NumericalError);
POVMCOH_DEFINE_ERROR(InconsistentExtension, NumericalError);
POVMCOH_DEFINE_ERROR(SandwichViolation, NumericalError);

#undef POVMCOH_DEFINE_ERROR

}  // namespace povmcoh

#endif  // POVMCOH_ERRORS_HPP
