/*
Copyright (c) 2026 The slfe authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "slfe/ingest.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>

#include "slfe/errors.hpp"

namespace slfe {

namespace {

bool parse_u32(const std::string& tok, uint32_t& out) {
  if (tok.empty()) return false;
  for (char c : tok) {
    if (c < '0' || c > '9') return false;
  }
  errno = 0;
  unsigned long long v = std::strtoull(tok.c_str(), nullptr, 10);
  if (errno != 0 || v > 0xFFFFFFFFull) return false;
  out = static_cast<uint32_t>(v);
  return true;
}

bool parse_weight(const std::string& tok, double& out) {
  if (tok.empty()) return false;
  char* end = nullptr;
  errno = 0;
  double v = std::strtod(tok.c_str(), &end);
  if (errno != 0 || end != tok.c_str() + tok.size()) return false;
  if (!std::isfinite(v) || v < 0.0) return false;
  out = v;
  return true;
}

EdgeList parse_text(std::istream& in, const EdgeListFormat& format) {
  EdgeList result;
  std::string line;
  uint64_t line_no = 0;
  uint32_t max_id = 0;
  bool any = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    if (line[first] == format.comment_prefix) continue;

    std::istringstream ls(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);

    size_t expected = format.weighted ? 3 : 2;
    if (tokens.size() != expected) {
      throw ParseError("line " + std::to_string(line_no) + ": expected " +
                       std::to_string(expected) + " tokens, got " +
                       std::to_string(tokens.size()));
    }
    Edge e;
    if (!parse_u32(tokens[0], e.src) || !parse_u32(tokens[1], e.dst)) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": endpoints must be non-negative integers");
    }
    if (format.weighted) {
      if (!parse_weight(tokens[2], e.weight)) {
        throw ParseError("line " + std::to_string(line_no) +
                         ": weight must be a non-negative real");
      }
    } else {
      e.weight = 1.0;
    }
    max_id = std::max({max_id, e.src, e.dst});
    any = true;
    result.edges.push_back(e);
  }
  result.num_vertices = any ? max_id + 1 : 0;
  return result;
}

EdgeList parse_binary(std::istream& in, const EdgeListFormat& format) {
  EdgeList result;
  const size_t record = format.weighted ? 12 : 8;
  unsigned char buf[12];
  uint32_t max_id = 0;
  bool any = false;
  uint64_t index = 0;
  for (;;) {
    in.read(reinterpret_cast<char*>(buf), static_cast<std::streamsize>(record));
    std::streamsize got = in.gcount();
    if (got == 0) break;
    if (static_cast<size_t>(got) != record) {
      throw FormatError("truncated binary edge list at record " +
                        std::to_string(index));
    }
    auto le32 = [&](size_t off) {
      return static_cast<uint32_t>(buf[off]) |
             static_cast<uint32_t>(buf[off + 1]) << 8 |
             static_cast<uint32_t>(buf[off + 2]) << 16 |
             static_cast<uint32_t>(buf[off + 3]) << 24;
    };
    Edge e;
    e.src = le32(0);
    e.dst = le32(4);
    if (format.weighted) {
      uint32_t bits = le32(8);
      float w;
      std::memcpy(&w, &bits, sizeof(w));
      if (!std::isfinite(w) || w < 0.0f) {
        throw FormatError("record " + std::to_string(index) +
                          ": weight must be a non-negative real");
      }
      e.weight = static_cast<double>(w);
    }
    max_id = std::max({max_id, e.src, e.dst});
    any = true;
    result.edges.push_back(e);
    ++index;
  }
  result.num_vertices = any ? max_id + 1 : 0;
  return result;
}

}  // namespace

EdgeList parse_edge_list(std::istream& in, const EdgeListFormat& format) {
  if (format.kind == EdgeListFormat::Kind::Text) return parse_text(in, format);
  return parse_binary(in, format);
}

EdgeList load_edge_list(const std::string& path, const EdgeListFormat& format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path);
  return parse_edge_list(in, format);
}

void serialize_edge_list(std::ostream& out, const std::vector<Edge>& edges,
                         const EdgeListFormat& format) {
  if (format.kind == EdgeListFormat::Kind::Text) {
    char buf[96];
    for (const Edge& e : edges) {
      if (format.weighted) {
        std::snprintf(buf, sizeof(buf), "%u %u %.17g\n", e.src, e.dst, e.weight);
      } else {
        std::snprintf(buf, sizeof(buf), "%u %u\n", e.src, e.dst);
      }
      out << buf;
    }
    return;
  }
  auto put32 = [&](uint32_t v) {
    unsigned char b[4] = {static_cast<unsigned char>(v & 0xFF),
                          static_cast<unsigned char>((v >> 8) & 0xFF),
                          static_cast<unsigned char>((v >> 16) & 0xFF),
                          static_cast<unsigned char>((v >> 24) & 0xFF)};
    out.write(reinterpret_cast<const char*>(b), 4);
  };
  for (const Edge& e : edges) {
    put32(e.src);
    put32(e.dst);
    if (format.weighted) {
      float w = static_cast<float>(e.weight);
      uint32_t bits;
      std::memcpy(&bits, &w, sizeof(bits));
      put32(bits);
    }
  }
}

void save_edge_list(const std::string& path, const std::vector<Edge>& edges,
                    const EdgeListFormat& format) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot open " + path + " for writing");
  serialize_edge_list(out, edges, format);
}

std::vector<Edge> generate_rmat(const RmatParams& params) {
  const auto& p = params.probabilities;
  double sum = p[0] + p[1] + p[2] + p[3];
  if (std::fabs(sum - 1.0) > 1e-9) {
    throw DomainError("rmat probabilities must sum to 1, got " +
                      std::to_string(sum));
  }
  for (double q : p) {
    if (q < 0.0) throw DomainError("rmat probabilities must be non-negative");
  }
  if (params.scale > 24) {
    throw DomainError("rmat scale capped at 24, got " +
                      std::to_string(params.scale));
  }

  const uint64_t n = 1ull << params.scale;
  const uint64_t m = static_cast<uint64_t>(params.edge_factor) * n;
  std::mt19937_64 rng(params.seed);
  std::uniform_real_distribution<double> uni(0.0, 1.0);

  std::vector<Edge> edges;
  edges.reserve(m);
  for (uint64_t i = 0; i < m; ++i) {
    uint64_t src = 0, dst = 0;
    for (uint32_t bit = 0; bit < params.scale; ++bit) {
      double r = uni(rng);
      src <<= 1;
      dst <<= 1;
      if (r < p[0]) {
        // top-left quadrant: both bits 0
      } else if (r < p[0] + p[1]) {
        dst |= 1;
      } else if (r < p[0] + p[1] + p[2]) {
        src |= 1;
      } else {
        src |= 1;
        dst |= 1;
      }
    }
    edges.push_back(Edge{static_cast<VertexId>(src),
                         static_cast<VertexId>(dst), 1.0});
  }
  return edges;
}

}  // namespace slfe
