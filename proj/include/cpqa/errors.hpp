// Copyright 2026 The CPQA Authors.
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

#ifndef CPQA_ERRORS_HPP_
#define CPQA_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace cpqa {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad configuration: unknown categories, malformed config files, missing keys.
class ConfigError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// A caller broke an operation's precondition (empty prompt, zero vector...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Raised by chat/embedding providers. Transport failures are retryable;
// refusals, empty bodies and unknown request ids are not.
class ProviderError : public Error {
 public:
  ProviderError(const std::string& what, bool retryable)
      : Error(what), retryable_(retryable) {}
  bool retryable() const noexcept { return retryable_; }

 private:
  bool retryable_;
};

}  // namespace cpqa

#endif  // CPQA_ERRORS_HPP_
