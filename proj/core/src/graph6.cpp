#include "shallow/graph6.hpp"

#include <string>
#include <vector>

#include "shallow/errors.hpp"

namespace shallow {
namespace {

constexpr std::string_view kHeader = ">>graph6<<";

int decode_char(char c) {
  auto u = static_cast<unsigned char>(c);
  if (u < 63 || u > 126) {
    throw InputError("graph6 character out of range 63..126 (code " + std::to_string(u) + ")");
  }
  return u - 63;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw InputError("empty graph6 line");

  std::size_t pos = 0;
  long long n = 0;
  if (text[0] != '~') {
    n = decode_char(text[0]);
    pos = 1;
  } else if (text.size() >= 2 && text[1] != '~') {
    if (text.size() < 4) throw InputError("truncated graph6 size header");
    for (int i = 1; i <= 3; ++i) n = (n << 6) | decode_char(text[i]);
    if (n < 63) throw InputError("non-canonical graph6 size header");
    pos = 4;
  } else {
    if (text.size() < 8) throw InputError("truncated graph6 size header");
    for (int i = 2; i <= 7; ++i) n = (n << 6) | decode_char(text[i]);
    if (n < 258048) throw InputError("non-canonical graph6 size header");
    pos = 8;
  }
  if (n > 100000) throw InputError("graph6 vertex count too large: " + std::to_string(n));

  const long long bits = n * (n - 1) / 2;
  const long long bytes = (bits + 5) / 6;
  if (static_cast<long long>(text.size() - pos) != bytes) {
    throw InputError("graph6 data length mismatch: expected " + std::to_string(bytes) + " bytes for n=" +
                     std::to_string(n) + ", got " + std::to_string(text.size() - pos));
  }

  std::vector<Edge> edges;
  long long k = 0;
  int vn = static_cast<int>(n);
  // Column-major upper triangle: (0,1), (0,2), (1,2), (0,3), ...
  int i = 0;
  int j = 1;
  for (long long b = 0; b < bytes; ++b) {
    int value = decode_char(text[pos + b]);
    for (int shift = 5; shift >= 0; --shift, ++k) {
      bool bit = (value >> shift) & 1;
      if (k >= bits) {
        if (bit) throw InputError("graph6 padding bits are nonzero");
        continue;
      }
      if (bit) edges.emplace_back(i, j);
      if (++i == j) {
        i = 0;
        ++j;
      }
    }
  }
  return {vn, edges};
}

std::string encode_graph6(const Graph& graph) {
  const long long n = graph.vertex_count();
  std::string out;
  if (n < 63) {
    out += static_cast<char>(63 + n);
  } else if (n < 258048) {
    out += '~';
    for (int shift = 12; shift >= 0; shift -= 6) out += static_cast<char>(63 + ((n >> shift) & 63));
  } else {
    out += "~~";
    for (int shift = 30; shift >= 0; shift -= 6) out += static_cast<char>(63 + ((n >> shift) & 63));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (graph.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out += static_cast<char>(63 + acc);
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out += static_cast<char>(63 + (acc << (6 - filled)));
  return out;
}

void read_graph6_stream(std::istream& in, const std::function<void(int, std::string_view, Graph)>& sink) {
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    Graph g;
    try {
      g = parse_graph6(line);
    } catch (const InputError& e) {
      throw InputError("line " + std::to_string(number) + ": " + e.what());
    }
    sink(number, line, std::move(g));
  }
}

}  // namespace shallow
