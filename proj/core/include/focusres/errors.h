// Copyright 2026 The focusres Authors.
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

#ifndef FOCUSRES_ERRORS_H_
#define FOCUSRES_ERRORS_H_

#include <stdexcept>
#include <string>

namespace focusres {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition on an argument was violated, e.g. classifying a non-pronoun.
class InvalidArgumentError : public Error {
 public:
  using Error::Error;
};

// A named ontology node, mention or document does not exist.
class LookupError : public Error {
 public:
  using Error::Error;
};

// Input data breaks a structural invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A reference between otherwise valid objects dangles.
class IntegrityError : public Error {
 public:
  using Error::Error;
};

// Malformed text in one of the file formats. The message carries the
// location (file:line[:column]).
class SyntaxError : public Error {
 public:
  using Error::Error;
};

// Output could not be produced for otherwise valid input.
class EmissionError : public Error {
 public:
  using Error::Error;
};

}  // namespace focusres

#endif  // FOCUSRES_ERRORS_H_
