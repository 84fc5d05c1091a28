#include "torelli/chords.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>

namespace torelli {

namespace {

int cyc(int i, int n) { return ((i % n) + n) % n; }

// k-th interval the strand of passage p enters after leaving via end_stub.
int ray_target(const ChordDiagram& d, int p, int end_stub, int k) {
  const Passage& ps = d.passages[p];
  const FreeWord& w = d.words[ps.word];
  int L = static_cast<int>(w.size());
  Letter l = w[ps.pos];
  if (end_stub == arr_stub(l)) return dep_stub(w[cyc(ps.pos + k, L)]);
  assert(end_stub == dep_stub(l));
  return arr_stub(w[cyc(ps.pos - k, L)]);
}

}  // namespace

bool strand_before(const ChordDiagram& d, int p, int q, int end_stub) {
  if (p == q) return false;
  int bound = 2 * static_cast<int>(d.words[d.passages[p].word].size() +
                                   d.words[d.passages[q].word].size()) +
              8;
  int current = end_stub;
  for (int k = 1; k <= bound; ++k) {
    int sp = ray_target(d, p, end_stub, k);
    int sq = ray_target(d, q, end_stub, k);
    if (sp == sq) {
      current = stub_mate(sp);
      continue;
    }
    int gp = d.fg.ccw_gap(current, sp);
    int gq = d.fg.ccw_gap(current, sq);
    assert(gp > 0 && gq > 0 && gp != gq);
    // the strand escaping counterclockwise-farther must start
    // counterclockwise-earlier, or the two would have to cross in the band
    return gp > gq;
  }
  throw std::runtime_error("strand order: escape itineraries never diverge");
}

namespace {

void check_words(const std::vector<FreeWord>& ws, const FatGraph& fg) {
  std::set<FreeWord> seen;
  for (const FreeWord& w : ws) {
    if (w.empty()) throw std::invalid_argument("diagram word is trivial");
    if (cyclically_reduced(w) != w) throw std::invalid_argument("diagram word not cyclically reduced");
    for (Letter l : w) {
      int b = l > 0 ? l : -l;
      if (b < 1 || b > 2 * fg.g) throw std::invalid_argument("diagram word letter out of range");
    }
    if (is_proper_power(w)) throw std::invalid_argument("diagram word is a proper power");
    // two entries naming the same unoriented curve would never diverge
    if (!seen.insert(canonical_rotation(w)).second ||
        !seen.insert(canonical_rotation(inverse(w))).second)
      throw std::invalid_argument("diagram words must be distinct curves");
  }
}

void collect_passages(ChordDiagram& d) {
  for (int wi = 0; wi < static_cast<int>(d.words.size()); ++wi)
    for (int m = 0; m < static_cast<int>(d.words[wi].size()); ++m) {
      Letter l = d.words[wi][m];
      d.passages.push_back({wi, m, l > 0 ? l : -l, l > 0});
    }
}

// Assign global slot-point ranks and cut the chords.
void finish_diagram(ChordDiagram& d) {
  int g = d.fg.g;
  d.interval_start.assign(4 * g, 0);
  d.pass_pt_o.assign(d.passages.size(), -1);
  d.pass_pt_t.assign(d.passages.size(), -1);
  d.npoints = 0;
  for (int p = 0; p < 4 * g; ++p) {
    int s = d.fg.at(p);
    d.interval_start[p] = d.npoints;
    int band = stub_band(s);
    const auto& list = stub_is_o(s) ? d.slots_o[band - 1] : d.slots_t[band - 1];
    auto& ranks = stub_is_o(s) ? d.pass_pt_o : d.pass_pt_t;
    for (int pid : list) ranks[pid] = d.npoints++;
  }
  d.chords_of_word.assign(d.words.size(), {});
  for (int wi = 0; wi < static_cast<int>(d.words.size()); ++wi) {
    int L = static_cast<int>(d.words[wi].size());
    for (int m = 0; m < L; ++m) {
      int id = static_cast<int>(d.chords.size());
      d.chords.push_back({d.arr_point(wi, cyc(m - 1, L)), d.dep_point(wi, m), wi, m});
      d.chords_of_word[wi].push_back(id);
    }
  }
}

}  // namespace

int ChordDiagram::passage_at(int word, int pos) const {
  int id = 0;
  for (int wi = 0; wi < word; ++wi) id += static_cast<int>(words[wi].size());
  return id + pos;
}

int ChordDiagram::arr_point(int word, int pos) const {
  int pid = passage_at(word, pos);
  return words[word][pos] > 0 ? pass_pt_t[pid] : pass_pt_o[pid];
}

int ChordDiagram::dep_point(int word, int pos) const {
  int pid = passage_at(word, pos);
  return words[word][pos] > 0 ? pass_pt_o[pid] : pass_pt_t[pid];
}

bool ChordDiagram::crossing(int i, int j) const {
  int a1 = std::min(chords[i].a, chords[i].b), b1 = std::max(chords[i].a, chords[i].b);
  int a2 = std::min(chords[j].a, chords[j].b), b2 = std::max(chords[j].a, chords[j].b);
  bool in1 = a1 < a2 && a2 < b1;
  bool in2 = a1 < b2 && b2 < b1;
  return in1 != in2;
}

int ChordDiagram::crossings_between(int w1, int w2) const {
  int n = 0;
  for (int i : chords_of_word[w1])
    for (int j : chords_of_word[w2]) n += crossing(i, j) ? 1 : 0;
  return n;
}

bool ChordDiagram::word_embedded(int w) const {
  const auto& cs = chords_of_word[w];
  for (size_t i = 0; i < cs.size(); ++i)
    for (size_t j = i + 1; j < cs.size(); ++j)
      if (crossing(cs[i], cs[j])) return false;
  return true;
}

ChordDiagram build_diagram(const std::vector<FreeWord>& cyc_words, const FatGraph& fg) {
  check_words(cyc_words, fg);
  ChordDiagram d;
  d.fg = fg;
  d.words = cyc_words;
  collect_passages(d);
  d.slots_t.assign(2 * fg.g, {});
  d.slots_o.assign(2 * fg.g, {});
  for (int b = 1; b <= 2 * fg.g; ++b) {
    std::vector<int>& order = d.slots_t[b - 1];
    for (int pid = 0; pid < static_cast<int>(d.passages.size()); ++pid) {
      if (d.passages[pid].band != b) continue;
      // insertion sort: the comparator is expensive but certified pairwise
      size_t at = order.size();
      while (at > 0 && strand_before(d, pid, order[at - 1], stub_t(b))) --at;
      order.insert(order.begin() + at, pid);
    }
    d.slots_o[b - 1].assign(order.rbegin(), order.rend());
  }
  finish_diagram(d);
  return d;
}

ChordDiagram build_diagram_with_orders(const std::vector<FreeWord>& cyc_words, const FatGraph& fg,
                                       const std::vector<std::vector<int>>& slots_t) {
  check_words(cyc_words, fg);
  ChordDiagram d;
  d.fg = fg;
  d.words = cyc_words;
  collect_passages(d);
  if (slots_t.size() != static_cast<size_t>(2 * fg.g))
    throw std::invalid_argument("slot orders: need one list per band");
  d.slots_t = slots_t;
  d.slots_o.assign(2 * fg.g, {});
  for (int b = 1; b <= 2 * fg.g; ++b) {
    std::vector<int> expect;
    for (int pid = 0; pid < static_cast<int>(d.passages.size()); ++pid)
      if (d.passages[pid].band == b) expect.push_back(pid);
    auto got = slots_t[b - 1];
    std::sort(got.begin(), got.end());
    if (got != expect) throw std::invalid_argument("slot orders: not a permutation of the band's passages");
    d.slots_o[b - 1].assign(d.slots_t[b - 1].rbegin(), d.slots_t[b - 1].rend());
  }
  finish_diagram(d);
  return d;
}

AdmissibilityReport admissibility(const FreeWord& w, const FatGraph& fg) {
  FreeWord c = cyclically_reduced(w);
  if (c.empty()) return {false, "trivial word"};
  for (Letter l : c) {
    int b = l > 0 ? l : -l;
    if (b < 1 || b > 2 * fg.g) return {false, "letter out of range"};
  }
  if (is_proper_power(c)) return {false, "proper power"};
  ChordDiagram d;
  try {
    d = build_diagram({c}, fg);
  } catch (const std::exception& e) {
    return {false, std::string("strand order failed: ") + e.what()};
  }
  if (!d.word_embedded(0)) return {false, "self-crossing"};
  return {true, ""};
}

bool is_admissible(const FreeWord& w, const FatGraph& fg) { return admissibility(w, fg).ok; }

}  // namespace torelli
