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

#include "lapdom/graph6.hpp"

#include <vector>

#include "lapdom/error.hpp"

namespace lapdom {
namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr int kBias = 63;
constexpr int kMaxLongForm = 258047;

}  // namespace

Graph decode_graph6(std::string_view text) {
  std::size_t base = 0;
  if (text.starts_with(kHeader)) {
    base = kHeader.size();
    text.remove_prefix(kHeader.size());
  }
  if (text.ends_with('\n')) text.remove_suffix(1);
  if (text.ends_with('\r')) text.remove_suffix(1);
  if (text.empty()) throw ParseError("graph6: empty record", base);

  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (c < kBias || c > 126) {
      throw ParseError("graph6: byte " + std::to_string(base + i) + " (value " +
                       std::to_string(c) + ") is outside the printable range 63..126",
                       base + i);
    }
  }

  int n = 0;
  std::size_t pos = 0;
  if (text[0] != '~') {
    n = text[0] - kBias;
    pos = 1;
  } else {
    if (text.size() >= 2 && text[1] == '~') {
      throw ParseError("graph6: eight-byte size header is not supported", base + 1);
    }
    if (text.size() < 4) throw ParseError("graph6: truncated size header", base + text.size());
    n = 0;
    for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | (text[i] - kBias);
    if (n <= 62) throw ParseError("graph6: non-canonical long size header", base);
    pos = 4;
  }
  if (n == 0) throw ParseError("graph6: graphs with zero nodes are not supported", base);

  const std::uint64_t nbits = Graph::triangle_size(n);
  const std::size_t body = static_cast<std::size_t>((nbits + 5) / 6);
  if (text.size() - pos != body) {
    const std::size_t where = text.size() - pos < body ? text.size() : pos + body;
    throw ParseError("graph6: body has " + std::to_string(text.size() - pos) +
                     " bytes, expected " + std::to_string(body) + " for n=" +
                     std::to_string(n), base + where);
  }

  std::vector<std::uint64_t> bits(Graph::word_count(n), 0);
  std::uint64_t k = 0;
  for (std::size_t i = 0; i < body; ++i) {
    const int chunk = text[pos + i] - kBias;
    for (int b = 5; b >= 0; --b, ++k) {
      if (((chunk >> b) & 1) == 0) continue;
      if (k >= nbits) {
        throw ParseError("graph6: nonzero padding bit in final byte", base + pos + i);
      }
      bits[k >> 6] |= std::uint64_t{1} << (k & 63);
    }
  }
  return Graph::from_triangle_bits(n, std::move(bits));
}

std::string encode_graph6(const Graph& g) {
  const int n = g.n();
  if (n > kMaxLongForm) throw InvalidArgument("graph6: n too large for the four-byte header");
  std::string out;
  const std::uint64_t nbits = Graph::triangle_size(n);
  out.reserve(4 + static_cast<std::size_t>((nbits + 5) / 6));
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }
  }
  const auto words = g.triangle_bits();
  for (std::uint64_t k = 0; k < nbits; k += 6) {
    int chunk = 0;
    for (std::uint64_t b = k; b < k + 6; ++b) {
      chunk <<= 1;
      if (b < nbits && ((words[b >> 6] >> (b & 63)) & 1)) chunk |= 1;
    }
    out.push_back(static_cast<char>(chunk + kBias));
  }
  return out;
}

}  // namespace lapdom
