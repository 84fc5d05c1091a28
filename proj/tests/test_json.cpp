#include "doctest.h"
#include "torelli/json_io.hpp"

using namespace torelli;

TEST_CASE("homology classes round-trip byte for byte") {
  HomologyClass h = 2 * basis_class(3, 0) - 3 * basis_class(3, 5);
  std::string s = homology_to_json(h);
  CHECK(homology_from_json(s) == h);
  CHECK(homology_to_json(homology_from_json(s)) == s);
  CHECK(s.back() == '\n');
  CHECK_THROWS(homology_from_json("[1, 2, 3]"));   // odd rank
  CHECK_THROWS(homology_from_json("{\"a\": 1}"));  // not an array
  CHECK_THROWS(homology_from_json("[1, 2, \"x\", 4, 5, 6]"));
}

TEST_CASE("wedge triples are normalized on load") {
  TriWedge w;
  w.add(0, 1, 4, 1);
  w.add(2, 3, 5, -2);
  std::string s = triwedge_to_json(w);
  CHECK(triwedge_from_json(s, 3) == w);
  CHECK(triwedge_to_json(triwedge_from_json(s, 3)) == s);
  // an out-of-order triple folds in with its permutation sign
  TriWedge odd = triwedge_from_json(
      "[{\"triple\": [2, 1, 5], \"coeff\": 1}]", 3);
  TriWedge expect;
  expect.add(0, 1, 4, -1);
  CHECK(odd == expect);
  // repeated indices vanish, out-of-range ones are rejected
  CHECK(triwedge_from_json("[{\"triple\": [1, 1, 5], \"coeff\": 3}]", 3).is_zero());
  CHECK_THROWS(triwedge_from_json("[{\"triple\": [0, 1, 5], \"coeff\": 1}]", 3));
  CHECK_THROWS(triwedge_from_json("[{\"triple\": [1, 2, 7], \"coeff\": 1}]", 3));
}

TEST_CASE("cohomology classes carry their modulus") {
  CohomologyClass e{{4, -1, 0, 2, 2, 2}, 4};
  std::string s = cohomology_to_json(e);
  CohomologyClass back = cohomology_from_json(s);
  CHECK(back.dual == e.dual);
  CHECK(back.modulus == e.modulus);
  CHECK(cohomology_to_json(back) == s);
  CHECK_THROWS(cohomology_from_json("{\"dual\": [1, 2]}"));  // modulus missing
}

TEST_CASE("complexes and functions survive the trip") {
  CellComplex cx = canonical_surface_complex(SurfaceSpec{3, true});
  std::string s = complex_to_json(cx);
  CellComplex back = complex_from_json(s);
  CHECK(back.nverts == cx.nverts);
  CHECK(back.edges == cx.edges);
  CHECK(back.faces == cx.faces);
  CHECK(back.boundary == cx.boundary);
  CHECK(complex_to_json(back) == s);
  CHECK_NOTHROW(back.validate());
  CHECK_THROWS(complex_from_json("{\"vertices\": 1, \"edges\": [[1, 9]], \"faces\": []}"));

  ConstructibleFunction fn = ConstructibleFunction::zero_for(cx);
  fn.v[0] = 2;
  fn.e[3] = -1;
  fn.f[0] = 5;
  std::string fs = function_to_json(fn);
  ConstructibleFunction fb = function_from_json(fs, cx);
  CHECK(fb.v == fn.v);
  CHECK(fb.e == fn.e);
  CHECK(fb.f == fn.f);
  CHECK(function_to_json(fb) == fs);
  CHECK_THROWS(function_from_json("{\"e/99\": 1}", cx));
  CHECK_THROWS(function_from_json("{\"q/1\": 1}", cx));
}

TEST_CASE("generator words round-trip with signed exponents") {
  TorelliWord w = {{"bp_x1_h2", 1}, {"sep_h1", -1}};
  std::string s = word_to_json(w);
  TorelliWord back = word_from_json(s);
  REQUIRE(back.size() == 2);
  CHECK(back[0].gen == "bp_x1_h2");
  CHECK(back[0].exp == 1);
  CHECK(back[1].exp == -1);
  CHECK(word_to_json(back) == s);
  CHECK_THROWS(word_from_json("[{\"gen\": \"bp_x1_h2\", \"exp\": 2}]"));
  CHECK_THROWS(word_from_json("[{\"exp\": 1}]"));
}

TEST_CASE("spines and immersions round-trip and revalidate") {
  FatGraph fg = FatGraph::canonical(4);
  std::string s = fatgraph_to_json(fg);
  FatGraph back = fatgraph_from_json(s);
  CHECK(back.g == 4);
  CHECK(back.order == fg.order);
  CHECK(fatgraph_to_json(back) == s);
  CHECK_THROWS(fatgraph_from_json("{\"g\": 3, \"cyclic_order\": [1, 2, 3]}"));

  for (PlanarImmersion im : {PlanarImmersion::standard(fg), PlanarImmersion::alternate(fg)}) {
    std::string js = immersion_to_json(im);
    PlanarImmersion ib = immersion_from_json(js);
    CHECK(ib.unit == im.unit);
    CHECK(ib.angles == im.angles);
    CHECK(ib.band_turns == im.band_turns);
    CHECK(immersion_to_json(ib) == js);
    CHECK_NOTHROW(ib.validate(fg));
  }
}

TEST_CASE("catalogs serialize with their maps and validate after reload") {
  FatGraph fg = FatGraph::canonical(3);
  Catalog cat = build_catalog(SurfaceSpec{3, true}, fg);
  std::string s = catalog_to_json(cat);
  Catalog back = catalog_from_json(s);
  CHECK(back.spec == cat.spec);
  REQUIRE(back.entries.size() == cat.entries.size());
  for (size_t i = 0; i < back.entries.size(); ++i) {
    CHECK(back.entries[i].name == cat.entries[i].name);
    CHECK(back.entries[i].a == cat.entries[i].a);
    CHECK(back.entries[i].fwd.img == cat.entries[i].fwd.img);
    CHECK(back.entries[i].bwd.inv == cat.entries[i].bwd.inv);
  }
  CHECK(catalog_to_json(back) == s);
  CHECK(validate_catalog(back, fg).ok);
}

TEST_CASE("emitters are deterministic across construction order") {
  // two TriWedges built in different insertion orders print identically
  TriWedge a, b;
  a.add(0, 1, 2, 1);
  a.add(3, 4, 5, 2);
  b.add(3, 4, 5, 2);
  b.add(0, 1, 2, 1);
  CHECK(triwedge_to_json(a) == triwedge_to_json(b));
}
