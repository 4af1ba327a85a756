#pragma once

#include "vines/int_poly.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace vines {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& rule);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Layered bipartite graph with a distinguished vertex (depth 0).
/// layers[d-1] holds the vertices at depth d; each vertex lists its edge
/// multiplicities to the vertices at depth d-1. Multiplicities are single
/// decimal digits in the string encoding.
struct Bigraph {
  std::vector<std::vector<std::vector<unsigned>>> layers;
  std::string label;

  std::size_t vertex_count() const;
  std::size_t depth() const { return layers.size(); }
  /// Canonical index of vertex `k` at depth `d` (depth 0 is index 0).
  std::size_t index_of(std::size_t d, std::size_t k) const;
  /// The last vertex of the depth-3 block, if any.
  std::size_t bottom_vertex_at_depth(std::size_t d) const;

  friend bool operator==(const Bigraph& a, const Bigraph& b) { return a.layers == b.layers; }
};

Bigraph parse_bigraph(const std::string& s);
std::string serialize_bigraph(const Bigraph& g);

/// Attaches a path of j edges at the distinguished vertex; the free end of
/// the path becomes the new distinguished vertex.
Bigraph translate(const Bigraph& g, std::size_t j);

struct AdjacencyMatrix {
  std::size_t size = 0;
  std::vector<long> entries;   // row-major
  std::vector<unsigned> parity;  // distance from the distinguished vertex mod 2
  std::vector<unsigned> depth;
  std::size_t start_index = 0;

  long at(std::size_t i, std::size_t j) const { return entries[i * size + j]; }
};

AdjacencyMatrix adjacency_matrix(const Bigraph& g);

/// det(xI - M), division-free (Berkowitz).
IntPoly char_poly(const AdjacencyMatrix& m);
IntPoly char_poly(const Bigraph& g);

/// True when the translates of g are eventually Dynkin diagrams A_n or D_n.
bool translates_are_A_or_D(const Bigraph& g);

}  // namespace vines
