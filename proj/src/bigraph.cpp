#include "vines/bigraph.hpp"

#include <algorithm>
#include <queue>

namespace vines {

ParseError::ParseError(std::size_t position, const std::string& rule)
    : std::runtime_error("parse error at position " + std::to_string(position) + ": " + rule), position_(position) {}

std::size_t Bigraph::vertex_count() const {
  std::size_t n = 1;
  for (const auto& layer : layers) n += layer.size();
  return n;
}

std::size_t Bigraph::index_of(std::size_t d, std::size_t k) const {
  if (d == 0) {
    if (k != 0) throw std::out_of_range("index_of: depth 0 has one vertex");
    return 0;
  }
  if (d > layers.size() || k >= layers[d - 1].size()) throw std::out_of_range("index_of: no such vertex");
  std::size_t idx = 1;
  for (std::size_t i = 0; i + 1 < d; ++i) idx += layers[i].size();
  return idx + k;
}

std::size_t Bigraph::bottom_vertex_at_depth(std::size_t d) const {
  if (d == 0) return 0;
  if (d > layers.size()) throw std::out_of_range("bottom_vertex_at_depth: graph too shallow");
  return index_of(d, layers[d - 1].size() - 1);
}

Bigraph parse_bigraph(const std::string& s) {
  if (s.compare(0, 3, "gbg") != 0) throw ParseError(0, "encoding must start with \"gbg\"");
  Bigraph g;
  std::size_t pos = 3;
  if (pos >= s.size()) throw ParseError(pos, "no depth blocks");
  std::size_t previous = 1;
  while (true) {
    std::vector<std::vector<unsigned>> layer;
    while (true) {
      std::vector<unsigned> token;
      const std::size_t token_start = pos;
      while (true) {
        if (pos >= s.size() || s[pos] < '0' || s[pos] > '9') {
          throw ParseError(pos, "expected a multiplicity digit");
        }
        token.push_back(static_cast<unsigned>(s[pos] - '0'));
        ++pos;
        if (pos < s.size() && s[pos] == 'x') {
          ++pos;
          continue;
        }
        break;
      }
      if (token.size() != previous) {
        throw ParseError(token_start, "vertex has " + std::to_string(token.size()) +
                                          " multiplicities but the previous depth has " +
                                          std::to_string(previous) + " vertices");
      }
      if (std::all_of(token.begin(), token.end(), [](unsigned v) { return v == 0; })) {
        throw ParseError(token_start, "vertex is not attached to the previous depth");
      }
      layer.push_back(std::move(token));
      if (pos < s.size() && s[pos] == 'p') {
        ++pos;
        continue;
      }
      break;
    }
    previous = layer.size();
    g.layers.push_back(std::move(layer));
    if (pos == s.size()) break;
    if (s[pos] != 'v') throw ParseError(pos, std::string("unexpected character '") + s[pos] + "'");
    ++pos;
  }
  return g;
}

std::string serialize_bigraph(const Bigraph& g) {
  std::string out = "gbg";
  for (std::size_t d = 0; d < g.layers.size(); ++d) {
    if (d) out += 'v';
    for (std::size_t k = 0; k < g.layers[d].size(); ++k) {
      if (k) out += 'p';
      for (std::size_t i = 0; i < g.layers[d][k].size(); ++i) {
        if (i) out += 'x';
        unsigned v = g.layers[d][k][i];
        if (v > 9) throw std::invalid_argument("serialize_bigraph: multiplicity above 9");
        out += static_cast<char>('0' + v);
      }
    }
  }
  return out;
}

Bigraph translate(const Bigraph& g, std::size_t j) {
  Bigraph out;
  out.label = g.label;
  out.layers.reserve(g.layers.size() + j);
  for (std::size_t i = 0; i < j; ++i) out.layers.push_back({{1}});
  out.layers.insert(out.layers.end(), g.layers.begin(), g.layers.end());
  return out;
}

AdjacencyMatrix adjacency_matrix(const Bigraph& g) {
  AdjacencyMatrix m;
  m.size = g.vertex_count();
  m.entries.assign(m.size * m.size, 0);
  m.parity.assign(m.size, 0);
  m.depth.assign(m.size, 0);
  m.start_index = 0;
  std::size_t prev_start = 0;
  std::size_t cur = 1;
  for (std::size_t d = 0; d < g.layers.size(); ++d) {
    const auto& layer = g.layers[d];
    for (std::size_t k = 0; k < layer.size(); ++k) {
      const std::size_t v = cur + k;
      m.depth[v] = static_cast<unsigned>(d + 1);
      m.parity[v] = static_cast<unsigned>((d + 1) % 2);
      for (std::size_t i = 0; i < layer[k].size(); ++i) {
        const std::size_t u = prev_start + i;
        m.entries[v * m.size + u] = layer[k][i];
        m.entries[u * m.size + v] = layer[k][i];
      }
    }
    prev_start = cur;
    cur += layer.size();
  }
  return m;
}

IntPoly char_poly(const AdjacencyMatrix& m) {
  const std::size_t n = m.size;
  if (n == 0) return IntPoly{1};
  // Berkowitz: c holds det(xI - A_r) in descending order for the leading
  // r x r block.
  std::vector<Integer> c{1, -m.at(0, 0)};
  for (std::size_t r = 1; r < n; ++r) {
    std::vector<Integer> t(r + 2);
    t[0] = 1;
    t[1] = -m.at(r, r);
    std::vector<Integer> v(r);
    for (std::size_t i = 0; i < r; ++i) v[i] = m.at(i, r);
    for (std::size_t k = 2; k <= r + 1; ++k) {
      Integer dot = 0;
      for (std::size_t i = 0; i < r; ++i) {
        long a = m.at(r, i);
        if (a != 0 && v[i] != 0) dot += a * v[i];
      }
      t[k] = -dot;
      if (k == r + 1) break;
      std::vector<Integer> nv(r);
      for (std::size_t i = 0; i < r; ++i) {
        Integer acc = 0;
        for (std::size_t j = 0; j < r; ++j) {
          long a = m.at(i, j);
          if (a != 0 && v[j] != 0) acc += a * v[j];
        }
        nv[i] = std::move(acc);
      }
      v = std::move(nv);
    }
    std::vector<Integer> nc(r + 2);
    for (std::size_t i = 0; i < r + 2; ++i) {
      for (std::size_t j = 0; j <= std::min(i, r); ++j) {
        if (c[j] != 0 && t[i - j] != 0) nc[i] += t[i - j] * c[j];
      }
    }
    c = std::move(nc);
  }
  std::reverse(c.begin(), c.end());
  return IntPoly(std::move(c));
}

IntPoly char_poly(const Bigraph& g) { return char_poly(adjacency_matrix(g)); }

bool translates_are_A_or_D(const Bigraph& g) {
  AdjacencyMatrix m = adjacency_matrix(g);
  const std::size_t n = m.size;
  std::size_t edges = 0;
  std::vector<std::size_t> deg(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      long a = m.at(i, j);
      if (a > 1) return false;
      deg[i] += static_cast<std::size_t>(a);
      if (j > i) edges += static_cast<std::size_t>(a);
    }
  }
  if (edges + 1 != n) return false;  // not a tree
  if (deg[0] > 1) return false;       // the tail would create a branch point
  std::vector<std::size_t> branch;
  for (std::size_t i = 0; i < n; ++i) {
    if (deg[i] > 3) return false;
    if (deg[i] == 3) branch.push_back(i);
  }
  if (branch.empty()) return true;  // a path with the vertex at one end: A
  if (branch.size() > 1) return false;
  // D: the branch vertex has two leaf neighbours besides the arm towards 0.
  const std::size_t b = branch[0];
  std::size_t leaves = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m.at(b, j) && deg[j] == 1 && j != 0) ++leaves;
  }
  return leaves >= 2;
}

}  // namespace vines
