#include "kempe/codec.hpp"

#include <sstream>

#include "kempe/error.hpp"

namespace kempe {

namespace {

constexpr int kBias = 63;

[[noreturn]] void malformed(const std::string& why) { throw Error(Errc::MalformedGraph6, why); }

}  // namespace

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 0x3f) + kBias));
  }
  int acc = 0;
  int bits = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = bits = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + kBias));
  return out;
}

Graph from_graph6(std::string_view text) {
  if (!text.empty() && text.back() == '\n') text.remove_suffix(1);
  if (text.empty()) malformed("empty input");
  for (char c : text)
    if (c < 63 || c > 126) malformed("byte outside printable graph6 range");

  std::size_t pos = 0;
  int n = 0;
  if (text[0] != '~') {
    n = text[0] - kBias;
    pos = 1;
  } else {
    if (text.size() < 4 || text[1] == '~') malformed("unsupported or truncated size header");
    for (int i = 1; i <= 3; ++i) n = (n << 6) | (text[i] - kBias);
    if (n < 63) malformed("non-canonical size header");
    pos = 4;
  }
  if (n > kMaxVertices) throw Error(Errc::TooLarge, "graph6 with " + std::to_string(n) + " vertices");

  const long long nbits = static_cast<long long>(n) * (n - 1) / 2;
  const auto expected = static_cast<std::size_t>((nbits + 5) / 6);
  if (text.size() - pos != expected)
    malformed("expected " + std::to_string(expected) + " data bytes, got " +
              std::to_string(text.size() - pos));

  GraphBuilder b(n);
  long long k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int byte = text[pos + k / 6] - kBias;
      if ((byte >> (5 - k % 6)) & 1) b.add_edge(i, j);
    }
  }
  if (k % 6 != 0) {
    const int byte = text[pos + k / 6] - kBias;
    if ((byte & ((1 << (6 - k % 6)) - 1)) != 0) malformed("non-zero padding bits");
  }
  return b.build();
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph from_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  long long n = 0;
  long long m = 0;
  if (!(in >> n >> m) || n < 0 || m < 0)
    throw Error(Errc::MalformedEdgeList, "missing or invalid 'n m' header");
  if (n > kMaxVertices) throw Error(Errc::TooLarge, "edge list with " + std::to_string(n) + " vertices");
  GraphBuilder b(static_cast<int>(n));
  for (long long i = 0; i < m; ++i) {
    long long u = 0;
    long long v = 0;
    if (!(in >> u >> v))
      throw Error(Errc::MalformedEdgeList, "expected " + std::to_string(m) + " edges, got " + std::to_string(i));
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw Error(Errc::IndexOutOfRange, "edge " + std::to_string(i) + " out of range");
    b.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  std::string rest;
  if (in >> rest) throw Error(Errc::MalformedEdgeList, "trailing data after edge list");
  return b.build();
}

}  // namespace kempe
