#include <algorithm>
#include <climits>
#include <functional>

#include "doctest.h"
#include "torelli/chords.hpp"

using namespace torelli;

namespace {

int self_crossings(const ChordDiagram& d) {
  int n = 0;
  for (int i = 0; i < static_cast<int>(d.chords.size()); ++i)
    for (int j = i + 1; j < static_cast<int>(d.chords.size()); ++j)
      n += d.crossing(i, j) ? 1 : 0;
  return n;
}

// exhaustive slot-order search: the fewest crossings any layout can reach
int min_crossings(const FreeWord& w, const FatGraph& fg) {
  ChordDiagram base = build_diagram({w}, fg);
  std::vector<std::vector<int>> cur(2 * fg.g);
  for (int p = 0; p < static_cast<int>(base.passages.size()); ++p)
    cur[base.passages[p].band - 1].push_back(p);
  int best = INT_MAX;
  std::function<void(size_t)> rec = [&](size_t b) {
    if (b == cur.size()) {
      best = std::min(best, self_crossings(build_diagram_with_orders({w}, fg, cur)));
      return;
    }
    std::sort(cur[b].begin(), cur[b].end());
    do {
      rec(b + 1);
    } while (std::next_permutation(cur[b].begin(), cur[b].end()));
  };
  rec(0);
  return best;
}

}  // namespace

TEST_CASE("admissibility matches the exhaustive layout search") {
  FatGraph fg = FatGraph::canonical(3);
  const char* words[] = {
      "x1",
      "x1 x2",
      "x1 x1 x1 x2",
      "x1 x3 x4 X3 X4",
      "x2 x4 x3 X4 X3",
      "x2 x3 x4 X3 X4",
      "x1 x2 X1 X2",
      "x1 x2 X1 x2",
      "x1 x2 X1 X2 x3 x4 X3 X4",
      "X4 X3 x2 x1 X2 x4 x3",
      "x1 x3 x4 X3 X4 x5 x6 X5 X6",
      "x1 x2 X1 X2 x1 x2 x1 X2 X1",
      "x1 x2 X1 X2 x3 x4 X3 X4 x5 x6 X5 X6",
  };
  for (const char* s : words) {
    CAPTURE(s);
    FreeWord w = cyclically_reduced(parse_word(s, 3));
    int min = min_crossings(w, fg);
    CHECK(self_crossings(build_diagram({w}, fg)) == min);
    CHECK(is_admissible(w, fg) == (min == 0));
  }
}

TEST_CASE("rejection reasons name the obstruction") {
  FatGraph fg = FatGraph::canonical(3);
  CHECK(!admissibility(FreeWord{}, fg).ok);
  CHECK(!admissibility(parse_word("x1 X1", 3), fg).ok);
  CHECK(!admissibility(parse_word("x1 x1", 3), fg).ok);        // proper power
  CHECK(admissibility(parse_word("x1 x2 X1 x2", 3), fg).reason == "self-crossing");
  CHECK(admissibility(parse_word("x1", 3), fg).ok);
}

TEST_CASE("parallel strands are nested, not braided") {
  FatGraph fg = FatGraph::canonical(3);
  ChordDiagram d = build_diagram({parse_word("x1 x1 x1 x2", 3)}, fg);
  CHECK(d.slots_t[0] == std::vector<int>{0, 1, 2});
  CHECK(d.slots_o[0] == std::vector<int>{2, 1, 0});
  for (int band = 0; band < 6; ++band) {
    std::vector<int> rev(d.slots_t[band].rbegin(), d.slots_t[band].rend());
    CHECK(d.slots_o[band] == rev);
  }
}

TEST_CASE("imposed layouts must be permutations of the band passages") {
  FatGraph fg = FatGraph::canonical(3);
  FreeWord w = parse_word("x1 x1 x1 x2", 3);
  std::vector<std::vector<int>> bad(6);
  bad[0] = {0, 0, 1};
  bad[1] = {3};
  CHECK_THROWS(build_diagram_with_orders({w}, fg, bad));
}

TEST_CASE("joint diagrams keep bounding pairs disjoint") {
  FatGraph fg = FatGraph::canonical(3);
  ChordDiagram d =
      build_diagram({parse_word("x1", 3), parse_word("x1 x3 x4 X3 X4", 3)}, fg);
  int between = 0;
  for (const auto& c1 : d.chords_of_word[0])
    for (const auto& c2 : d.chords_of_word[1]) between += d.crossing(c1, c2) ? 1 : 0;
  CHECK(between == 0);
}

TEST_CASE("duplicate curves cannot share a diagram") {
  FatGraph fg = FatGraph::canonical(3);
  FreeWord w = parse_word("x1 x3 x4 X3 X4", 3);
  CHECK_THROWS(build_diagram({w, w}, fg));
  CHECK_THROWS(build_diagram({w, inverse(w)}, fg));  // same unoriented curve
}
