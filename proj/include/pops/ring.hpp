// Copyright 2026 The power-ops Authors
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

// Generic entry points for the coefficient-ring protocol (is_zero, is_unit,
// inverse) so that templates whose own members share those names can still
// reach the free overloads.

#ifndef POPS_RING_HPP
#define POPS_RING_HPP

#include "pops/qpoly.hpp"

namespace pops::ring {

template <class T>
bool zero(const T& x) {
  return is_zero(x);
}

template <class T>
bool unit(const T& x) {
  return is_unit(x);
}

template <class T>
T inv(const T& x) {
  return inverse(x);
}

}  // namespace pops::ring

#endif  // POPS_RING_HPP
