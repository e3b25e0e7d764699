// Copyright 2026 The denoise-lab Authors
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

#ifndef DENOISELAB_ERRORS_HPP_
#define DENOISELAB_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace denoiselab {

// Error taxonomy, mirrored by the CLI exit codes:
//   ConfigError  -> 1 (usage / configuration)
//   DataError    -> 2 (malformed or inconsistent input data)
//   NumericError -> 3 (numerical failure: divergence, singular system, ...)
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace denoiselab

#endif  // DENOISELAB_ERRORS_HPP_
