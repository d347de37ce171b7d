#include "trireg/graph6.hpp"

#include <charconv>
#include <sstream>
#include <vector>

namespace trireg {

namespace {

[[noreturn]] void bad_format(const std::string& why) {
  throw Error(ErrorCode::FormatError, why);
}

}  // namespace

std::string encode_graph6(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) throw Error(ErrorCode::EmptyGraph, "graph6 has no empty form");

  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    // 18-bit size, most significant 6-bit group first
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 0x3f) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 0x3f) + 63));
    out.push_back(static_cast<char>((n & 0x3f) + 63));
  }

  int group = 0, filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      group = (group << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + 63));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) {
    group <<= (6 - filled);
    out.push_back(static_cast<char>(group + 63));
  }
  return out;
}

Graph decode_graph6(std::string_view line) {
  if (line.empty()) bad_format("empty graph6 line");
  for (char c : line) {
    if (c < 63 || c > 126) bad_format("graph6 character out of range 63..126");
  }

  size_t pos = 0;
  long long n = 0;
  if (line[0] == '~') {
    if (line.size() >= 2 && line[1] == '~') bad_format("graph6 size beyond supported range");
    if (line.size() < 4) bad_format("truncated graph6 size prefix");
    n = (static_cast<long long>(line[1] - 63) << 12) |
        (static_cast<long long>(line[2] - 63) << 6) |
        static_cast<long long>(line[3] - 63);
    pos = 4;
  } else {
    n = line[0] - 63;
    pos = 1;
  }
  if (n < 1 || n > kMaxVertices) bad_format("graph6 vertex count out of range");

  const long long bits = n * (n - 1) / 2;
  const size_t expect = static_cast<size_t>((bits + 5) / 6);
  if (line.size() - pos != expect) bad_format("graph6 body length mismatch");

  GraphBuilder b(static_cast<int>(n));
  long long bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      int value = line[pos + bit / 6] - 63;
      if ((value >> (5 - bit % 6)) & 1) b.add_edge(i, j);
    }
  }
  // trailing padding must be zero
  for (long long t = bit; t < static_cast<long long>(expect) * 6; ++t) {
    int value = line[pos + t / 6] - 63;
    if ((value >> (5 - t % 6)) & 1) bad_format("nonzero graph6 padding");
  }
  return b.build();
}

std::string encode_edge_list(const Graph& g) {
  auto edges = g.edges();
  std::ostringstream out;
  out << g.vertex_count() << ' ' << edges.size() << '\n';
  for (const auto& [u, v] : edges) out << u << ' ' << v << '\n';
  return out.str();
}

Graph decode_edge_list(std::string_view text) {
  std::vector<long long> numbers;
  size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
    } else if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
    } else {
      size_t j = i;
      while (j < text.size() && text[j] != ' ' && text[j] != '\t' &&
             text[j] != '\n' && text[j] != '\r') {
        ++j;
      }
      long long value = 0;
      auto res = std::from_chars(text.data() + i, text.data() + j, value);
      if (res.ec != std::errc{} || res.ptr != text.data() + j || value < 0) {
        bad_format("edge list token is not a non-negative integer");
      }
      numbers.push_back(value);
      i = j;
    }
  }
  if (numbers.size() < 2) bad_format("edge list needs a \"n m\" header");
  const long long n = numbers[0], m = numbers[1];
  if (n < 0 || n > kMaxVertices) bad_format("edge list vertex count out of range");
  if (static_cast<long long>(numbers.size()) != 2 + 2 * m) {
    bad_format("edge list pair count does not match header");
  }
  GraphBuilder b(static_cast<int>(n));
  for (long long e = 0; e < m; ++e) {
    long long u = numbers[2 + 2 * e], v = numbers[3 + 2 * e];
    if (u >= n || v >= n) bad_format("edge list endpoint out of range");
    if (u == v) bad_format("edge list contains a self-loop");
    b.add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  return b.build();
}

}  // namespace trireg
