#pragma once

#include <string>

#include "torelli/catalog.hpp"
#include "torelli/curvegraph.hpp"
#include "torelli/euler.hpp"
#include "torelli/homology.hpp"
#include "torelli/winding.hpp"

namespace torelli {

// Emitters produce key-ordered, two-space-indented JSON ending in a newline,
// so identical data always serializes to identical bytes.  Loaders throw
// std::runtime_error with a short reason on malformed input.  All indices in
// the wire formats are 1-based; conversion happens here.

std::string homology_to_json(const HomologyClass& h);
HomologyClass homology_from_json(const std::string& text);

std::string triwedge_to_json(const TriWedge& w);
TriWedge triwedge_from_json(const std::string& text, int g);

std::string cohomology_to_json(const CohomologyClass& e);
CohomologyClass cohomology_from_json(const std::string& text);

std::string complex_to_json(const CellComplex& cx);
CellComplex complex_from_json(const std::string& text);

// constructible functions keyed "v/i", "e/i", "f/i"; zero cells omitted
std::string function_to_json(const ConstructibleFunction& fn);
ConstructibleFunction function_from_json(const std::string& text, const CellComplex& cx);

std::string word_to_json(const TorelliWord& w);
TorelliWord word_from_json(const std::string& text);

std::string fatgraph_to_json(const FatGraph& fg);
FatGraph fatgraph_from_json(const std::string& text);

std::string immersion_to_json(const PlanarImmersion& im);
PlanarImmersion immersion_from_json(const std::string& text);

// catalog entries carry their curves and both maps, images as word strings
std::string catalog_to_json(const Catalog& cat);
Catalog catalog_from_json(const std::string& text);

// vertices as signed band-id cycles, edges with src/dst/sign/genus/cells
std::string graph_to_json(const UniverseGraph& g, const std::vector<TameSet>& edge_cells);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace torelli
