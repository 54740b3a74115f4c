// Copyright 2026 The footprint Authors
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

#ifndef FOOTPRINT_ERRORS_H_
#define FOOTPRINT_ERRORS_H_

#include <stdexcept>
#include <string>

namespace footprint {

// Root of every error thrown by the library. The CLI maps InputError
// subclasses to exit code 1 and everything else to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad caller-supplied data: malformed URLs, missing files, bad parameters.
class InputError : public Error {
 public:
  using Error::Error;
};

// A data file that exists but does not follow its documented format.
class FormatError : public InputError {
 public:
  using InputError::InputError;
};

class VersionError : public FormatError {
 public:
  using FormatError::FormatError;
};

// Non-monotone timestamp appended to an identity's event sequence.
class OrderingError : public InputError {
 public:
  using InputError::InputError;
};

class LookupError : public InputError {
 public:
  using InputError::InputError;
};

class ParameterError : public InputError {
 public:
  using InputError::InputError;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

// Distance requested against an empty profile.
class UndefinedDistanceError : public Error {
 public:
  using Error::Error;
};

class FetchError : public Error {
 public:
  FetchError(const std::string& message, int status)
      : Error(message), status_(status) {}

  // HTTP status when the server answered, 0 for transport failures.
  int status() const { return status_; }

 private:
  int status_;
};

}  // namespace footprint

#endif  // FOOTPRINT_ERRORS_H_
