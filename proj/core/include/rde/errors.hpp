// Copyright 2026 The RDE Authors.
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

#ifndef RDE_ERRORS_HPP
#define RDE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rde {

/// Raised for invalid run/experiment configurations (bad bounds, bad
/// population sizes, unknown flags, unparseable config files).
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace rde

#endif  // RDE_ERRORS_HPP
