// Copyright 2026 The privgraph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef PRIVGRAPH_NUMERIC_HPP_
#define PRIVGRAPH_NUMERIC_HPP_

#include <cstdint>

#include "privgraph/errors.hpp"

namespace privgraph {

// Smallest L with 2^L >= n, for n >= 1.
inline int CeilLog2(std::int64_t n) {
  if (n < 1) throw InvalidArgument("CeilLog2 needs n >= 1");
  int l = 0;
  while ((std::int64_t{1} << l) < n) ++l;
  return l;
}

}  // namespace privgraph

#endif  // PRIVGRAPH_NUMERIC_HPP_
