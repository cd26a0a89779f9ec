// Copyright 2026 The lazyroute developers
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

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lazyroute {

/** Index of a logical or physical qubit (wire). */
using Qubit = std::uint32_t;

/** Thrown when an operation receives invalid input or an internal
 *  contract is violated. */
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& message) : std::runtime_error(message) {}
};

namespace detail {
[[noreturn]] inline void fail(const std::string& message) { throw Error(message); }
inline void require(bool condition, const std::string& message) {
  if (!condition) fail(message);
}
}  // namespace detail

}  // namespace lazyroute
