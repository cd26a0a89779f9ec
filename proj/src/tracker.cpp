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

#include "lazyroute/tracker.hpp"

namespace lazyroute {

std::uint32_t tracker_size(const Tracker& h) {
  return std::visit([](const auto& state) { return state.size(); }, h);
}

bool tracker_is_identity(const Tracker& h) {
  return std::visit([](const auto& state) { return state.is_identity(); }, h);
}

std::string tracker_kind_name(const Tracker& h) {
  struct Namer {
    std::string operator()(const Permutation&) const { return "permutation"; }
    std::string operator()(const LinearTable&) const { return "linear"; }
    std::string operator()(const CliffordTableau&) const { return "tableau"; }
  };
  return std::visit(Namer{}, h);
}

CliffordTableau tracker_tableau(const Tracker& h) {
  struct Embedder {
    CliffordTableau operator()(const Permutation& sigma) const {
      return CliffordTableau::from_permutation(sigma);
    }
    CliffordTableau operator()(const LinearTable& a) const {
      return CliffordTableau::from_linear(a);
    }
    CliffordTableau operator()(const CliffordTableau& t) const { return t; }
  };
  return std::visit(Embedder{}, h);
}

}  // namespace lazyroute
