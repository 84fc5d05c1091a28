#pragma once

#include <optional>
#include <vector>

#include "torelli/arrangement.hpp"
#include "torelli/surface.hpp"

namespace torelli {

// Vertex of the oriented curve graph: a simple closed curve held as the
// canonical rotation of its cyclic word, with its homology class cached.
struct CurveVertex {
  FreeWord w;
  HomologyClass cls;
  bool operator==(const CurveVertex& o) const { return w == o.w; }
};

// Rejects words that are non-simple, trivial, or parallel to the boundary,
// and (when given) words in the wrong homology class.
std::optional<CurveVertex> admit_vertex(const FreeWord& w, const FatGraph& fg,
                                        const HomologyClass* expect = nullptr);

// An embedded subsurface that realizes an edge: an oriented piece whose
// frontier is exactly the two curves.  sign +1 means the piece induces w1
// reversed and w2 forward (it points from w1 to w2).
struct SubsurfacePiece {
  int sign = 0;
  int genus = 0;
  TameSet cells;
};

// Components of the complement of words w1 and w2 inside the complex (any
// other words present are transparent), kept when their frontier is exactly
// the two whole curves, coherently oriented, away from the surface boundary.
std::vector<SubsurfacePiece> pair_pieces(const CurveComplex& cc, int w1, int w2);

// Curve-graph edges between two vertices: genus-1 cobounding pieces.
// Intersecting curves simply produce no qualifying piece.
std::vector<SubsurfacePiece> find_edges(const CurveVertex& a, const CurveVertex& b,
                                        const FatGraph& fg, bool capped);

// Finite induced subgraph over an explicit vertex universe.
struct UniverseGraph {
  SurfaceSpec spec{3, true};
  std::vector<CurveVertex> verts;
  struct Edge {
    int u, v, sign, genus;
  };
  std::vector<Edge> edges;
  std::vector<std::vector<int>> adj;  // vertex -> incident edge ids

  int index_of(const FreeWord& w) const;  // -1 when absent
};
UniverseGraph build_graph(const SurfaceSpec& spec, const std::vector<CurveVertex>& universe,
                          const FatGraph& fg);

struct PathStep {
  int edge = -1;
  bool forward = true;  // traversed from edge.u to edge.v
};
struct GraphPath {
  std::vector<int> verts;      // hops+1 vertex ids
  std::vector<PathStep> steps;
};

long long signed_length(const UniverseGraph& g, const GraphPath& p);
std::vector<GraphPath> simple_paths(const UniverseGraph& g, int from, int to, int max_hops);
std::optional<GraphPath> shortest_path(const UniverseGraph& g, int from, int to);
// signed length of a shortest path (path-independent within the graph,
// exactly when bordered and mod g-1 when closed)
std::optional<long long> signed_distance(const UniverseGraph& g, int from, int to);

// Re-derives each step's piece on the joint complex of all path curves and
// accumulates the signed indicator density.
struct PreimageTrace {
  CurveComplex joint;
  ConstructibleFunction density;
};
PreimageTrace trace_preimage(const UniverseGraph& g, const GraphPath& p, const FatGraph& fg);
// signed path length against the euler integral of the traced density
bool verify_length_vs_integral(const UniverseGraph& g, const GraphPath& p, const FatGraph& fg);

}  // namespace torelli
