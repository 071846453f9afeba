// Copyright 2026 The Authors.
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

#include "rotunda/errors.hpp"

#include <atomic>
#include <cstdlib>

namespace rotunda {

namespace {

constexpr int kDefaultBound = 16;

int initial_bound() {
  if (const char* env = std::getenv("ROTUNDA_ENUM_BOUND")) {
    int v = std::atoi(env);
    if (v > 0 && v <= 64) return v;
  }
  return kDefaultBound;
}

std::atomic<int>& bound_storage() {
  static std::atomic<int> bound{initial_bound()};
  return bound;
}

}  // namespace

int enumeration_bound() { return bound_storage().load(); }

void set_enumeration_bound(int bound) {
  if (bound < 1 || bound > 64) {
    throw InputError("enumeration bound must be in [1,64], got " +
                     std::to_string(bound));
  }
  bound_storage().store(bound);
}

void check_enumeration_bound(int n, const char* operation) {
  int bound = enumeration_bound();
  if (n > bound) {
    throw BoundError(std::string(operation) + ": ground set of size " +
                     std::to_string(n) + " exceeds the enumeration bound " +
                     std::to_string(bound));
  }
}

}  // namespace rotunda
