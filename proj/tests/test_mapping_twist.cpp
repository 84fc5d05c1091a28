#include "doctest.h"
#include "torelli/twist.hpp"
#include "torelli/winding.hpp"

using namespace torelli;

namespace {

MappingClass twist(const char* s, const FatGraph& fg, int power = 1) {
  return dehn_twist_power(parse_word(s, fg.g), power, fg);
}

}  // namespace

TEST_CASE("pinned twist images on the handle loops") {
  FatGraph fg = FatGraph::canonical(3);
  CHECK(word_str(twist("x1", fg).img[1]) == "x2 X1");
  CHECK(word_str(twist("x2", fg).img[0]) == "x1 x2");
  // twisting along the detoured partner conjugates the loop by it
  MappingClass tb = twist("x1 x3 x4 X3 X4", fg);
  FreeWord b = parse_word("x1 x3 x4 X3 X4", 3);
  CHECK(tb.img[0] == reduced(concat(concat(b, parse_word("x1", 3)), inverse(b))));
  // x2 crosses b once, b x5 and x6 not at all
  CHECK(tb.img[1] == parse_word("x1 x3 x4 X3 X4 X1 x4 x3 X4 X3 x2 x4 x3 X4 X3 X1", 3));
  CHECK(tb.img[4] == parse_word("x5", 3));
  CHECK(tb.img[5] == parse_word("x6", 3));
}

TEST_CASE("separating twist conjugates inside its handle and fixes the rest") {
  FatGraph fg = FatGraph::canonical(3);
  MappingClass ts = twist("x1 x2 X1 X2", fg);
  FreeWord s = parse_word("x1 x2 X1 X2", 3);
  for (int i : {0, 1})
    CHECK(ts.img[i] == reduced(concat(concat(s, FreeWord{static_cast<Letter>(i + 1)}), inverse(s))));
  for (int i = 2; i < 6; ++i) CHECK(ts.img[i] == FreeWord{static_cast<Letter>(i + 1)});
}

TEST_CASE("every twist is a boundary-fixing automorphism") {
  FatGraph fg = FatGraph::canonical(3);
  for (const char* s : {"x1", "x4", "x1 x3 x4 X3 X4", "x1 x2 X1 X2", "x2 x4 x3 X4 X3"}) {
    MappingClass t = twist(s, fg);
    CHECK(is_valid_automorphism(t));
    CHECK(fixes_boundary(t));
  }
}

TEST_CASE("twists along disjoint curves commute") {
  FatGraph fg = FatGraph::canonical(3);
  MappingClass a = twist("x1", fg), b = twist("x3", fg);
  CHECK(compose(a, b).img == compose(b, a).img);
  MappingClass c = twist("x1 x3 x4 X3 X4", fg);
  CHECK(compose(a, c).img == compose(c, a).img);
}

TEST_CASE("once-crossing twists satisfy the braid relation") {
  FatGraph fg = FatGraph::canonical(3);
  MappingClass a = twist("x1", fg), b = twist("x2", fg);
  MappingClass aba = compose(a, compose(b, a));
  MappingClass bab = compose(b, compose(a, b));
  CHECK(aba.img == bab.img);
  CHECK(aba.inv == bab.inv);
}

TEST_CASE("twist powers compose and invert") {
  FatGraph fg = FatGraph::canonical(3);
  MappingClass t = twist("x2", fg);
  CHECK(compose(t, twist("x2", fg, -1)).img == MappingClass::identity(3).img);
  CHECK(twist("x2", fg, 2).img == compose(t, t).img);
  CHECK(twist("x2", fg, -1).img == inverse_of(t).img);
}

TEST_CASE("twists transform covariantly under the group") {
  FatGraph fg = FatGraph::canonical(3);
  MappingClass f = twist("x2", fg);
  // f(x1) = x1 x2, still embedded
  FreeWord fc = apply_word(f, parse_word("x1", 3));
  MappingClass lhs = dehn_twist(fc, fg);
  MappingClass rhs = compose(f, compose(twist("x1", fg), inverse_of(f)));
  CHECK(lhs.img == rhs.img);
}

TEST_CASE("homology action of a twist is the transvection") {
  FatGraph fg = FatGraph::canonical(3);
  for (const char* s : {"x1", "x2", "x5", "x1 x3 x4 X3 X4", "x2 x4 x3 X4 X3"}) {
    MappingClass t = twist(s, fg);
    IntMat m = homology_matrix(t);
    CHECK(m == transvection_matrix(homology_of(parse_word(s, 3), 3)));
    CHECK(is_symplectic(m));
  }
}

TEST_CASE("separating twists and bounding pairs act trivially on homology") {
  FatGraph fg = FatGraph::canonical(3);
  MappingClass sep = twist("x1 x2 X1 X2", fg);
  CHECK(is_torelli(sep));
  MappingClass bp = compose(twist("x1", fg), twist("x1 x3 x4 X3 X4", fg, -1));
  CHECK(is_torelli(bp));
  CHECK(!is_torelli(twist("x1", fg)));
}

TEST_CASE("twisting rejects curves that are not embedded") {
  FatGraph fg = FatGraph::canonical(3);
  CHECK_THROWS(dehn_twist(parse_word("x1 x2 X1 x2", 3), fg));
  CHECK_THROWS(dehn_twist(parse_word("x1 x1", 3), fg));
  CHECK_THROWS(dehn_twist(FreeWord{}, fg));
}

TEST_CASE("composition applies the right factor first") {
  FatGraph fg = FatGraph::canonical(3);
  MappingClass a = twist("x1", fg), b = twist("x2", fg);
  MappingClass ab = compose(a, b);
  for (int j = 0; j < 6; ++j)
    CHECK(ab.img[j] == reduced(apply_word(a, b.img[j])));
}
