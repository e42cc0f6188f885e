// Copyright 2026 The lapdom Authors
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

#include <string>
#include <string_view>

#include "lapdom/graph.hpp"

namespace lapdom {

// graph6 codec. Sizes up to 62 use the one-byte header; 63..258047 use the
// four-byte '~' form. An optional ">>graph6<<" prefix and a trailing '\n' or
// "\r\n" are accepted by the decoder. Errors are ParseError with the byte
// offset into `text`.
Graph decode_graph6(std::string_view text);
std::string encode_graph6(const Graph& g);

}  // namespace lapdom
