#pragma once

#include <string>
#include <vector>

#include "torelli/ribbon.hpp"

namespace torelli {

// One traversal of a band by one of the diagram's cyclic words.
struct Passage {
  int word;      // index into words
  int pos;       // letter position
  int band;      // 1..2g
  bool forward;  // o -> t
};

// Taut position of a multicurve on the fattened spine.  Each band carries the
// parallel strands of every passage through it; the transverse order of the
// strands is forced by where they escape to, and the two ends of a band see
// the same strands in opposite counterclockwise order.  Crossings can then
// only happen between the chords the curves cut across the vertex disc.
struct ChordDiagram {
  FatGraph fg;
  std::vector<FreeWord> words;    // cyclically reduced, distinct, primitive
  std::vector<Passage> passages;
  std::vector<std::vector<int>> slots_t;  // per band: passage ids, ccw order at the t end
  std::vector<std::vector<int>> slots_o;  // reversed at the o end

  // global counterclockwise ranks for every slot point on the disc boundary
  std::vector<int> interval_start;  // by cyclic position of the stub interval
  int npoints = 0;
  std::vector<int> pass_pt_o, pass_pt_t;  // rank of each passage's endpoint

  struct Chord {
    int a, b;       // point ranks; directed a -> b
    int word, pos;  // the chord leads into this letter
  };
  std::vector<Chord> chords;
  std::vector<std::vector<int>> chords_of_word;

  int arr_point(int word, int pos) const;
  int dep_point(int word, int pos) const;
  bool crossing(int i, int j) const;
  int crossings_between(int w1, int w2) const;
  bool word_embedded(int w) const;
  int passage_at(int word, int pos) const;  // passage id
};

// Strand order at one band end, decided by racing the two escape itineraries
// until they part ways; the strand heading for the counterclockwise-farther
// interval takes the counterclockwise-earlier slot.
bool strand_before(const ChordDiagram& d, int p, int q, int end_stub);

ChordDiagram build_diagram(const std::vector<FreeWord>& cyc_words, const FatGraph& fg);
// Same, but with imposed t-end slot orders (test/oracle hook).
ChordDiagram build_diagram_with_orders(const std::vector<FreeWord>& cyc_words, const FatGraph& fg,
                                       const std::vector<std::vector<int>>& slots_t);

struct AdmissibilityReport {
  bool ok;
  std::string reason;  // empty when ok
};
// Does the cyclic word carry a simple closed curve?  Trivial words, proper
// powers and words with forced self-crossings are rejected.
AdmissibilityReport admissibility(const FreeWord& w, const FatGraph& fg);
bool is_admissible(const FreeWord& w, const FatGraph& fg);

}  // namespace torelli
