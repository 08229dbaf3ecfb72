#pragma once

#include <array>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "eqsig/errors.hpp"

namespace eqsig {

enum class Side { left, right };

inline Side opposite(Side s) { return s == Side::left ? Side::right : Side::left; }

inline const char* to_string(Side s) { return s == Side::left ? "left" : "right"; }

// Raw diagram content as read from a file; not yet checked.
//
// Segment labels are implicit: 1..2n+2 in traversal order. Segment 1 starts
// at the fixed point F0, segment n+1 ends at F1, segment n+2 starts at F1,
// segment 2n+2 ends at F0. The marked half-axis h is oriented F0 -> F1.
struct CrossingRecord {
  int id = 0;
  // Segment labels counterclockwise, starting from the incoming under-strand.
  // Slot 0 is incoming under, slot 2 outgoing under; slots 1 and 3 carry the
  // over strand.
  std::array<int, 4> pd{};
};

struct DiagramData {
  std::string name;
  int n = 0;
  std::vector<CrossingRecord> crossings;
  std::vector<int> on_axis;
  std::vector<std::array<int, 2>> involution;  // off-axis pairs only
  Side h_side_at_start = Side::left;
  Side h_side_at_end = Side::left;
};

// One endpoint of a segment: a crossing slot, or a fixed point (crossing==0).
struct SegmentEnd {
  int crossing = 0;
  int slot = -1;
  bool is_fixed_point() const { return crossing == 0; }
};

// A diagram that has passed validate(). All accessors assume validity.
class SymmetricDiagram {
 public:
  const DiagramData& data() const { return data_; }
  const std::string& name() const { return data_.name; }
  int n() const { return data_.n; }
  int segment_count() const { return 2 * data_.n + 2; }

  // The segment involution induced by the diagram symmetry.
  int sigma(int seg) const { return 2 * data_.n + 3 - seg; }

  const CrossingRecord& crossing(int id) const { return data_.crossings[index_.at(id)]; }
  bool is_on_axis(int id) const { return on_axis_.count(id) != 0; }
  int partner(int id) const { return partner_.at(id); }

  int under_in(int id) const { return crossing(id).pd[0]; }
  int under_out(int id) const { return crossing(id).pd[2]; }
  int over_in(int id) const { return over_in_.at(id); }
  int over_out(int id) const { return over_in(id) + 1; }
  // Slot (1 or 3) holding the incoming over strand.
  int over_in_slot(int id) const { return over_in_slot_.at(id); }

  // Where segment `seg` arrives (its head) and departs (its tail).
  SegmentEnd head_of(int seg) const { return head_[static_cast<std::size_t>(seg)]; }
  SegmentEnd tail_of(int seg) const { return tail_[static_cast<std::size_t>(seg)]; }

  friend SymmetricDiagram validate(const DiagramData& candidate);

 private:
  DiagramData data_;
  std::map<int, std::size_t> index_;
  std::set<int> on_axis_;
  std::map<int, int> partner_;
  std::map<int, int> over_in_;
  std::map<int, int> over_in_slot_;
  std::vector<SegmentEnd> head_, tail_;
};

namespace detail {

// Tuple of the mirror crossing: labels mapped through sigma, cyclic order
// reversed (the symmetry reverses the plane orientation), rotated so the new
// incoming under strand (the image of the old outgoing over) sits in slot 0.
// The rotation is positional; a label lookup would be ambiguous on kinks.
inline std::array<int, 4> expected_mirror_pd(const std::array<int, 4>& pd, int over_in_slot,
                                             int seg_count) {
  auto sig = [seg_count](int j) { return seg_count + 1 - j; };
  std::array<int, 4> rev = {sig(pd[0]), sig(pd[3]), sig(pd[2]), sig(pd[1])};
  // rev positions of the original rays: [slot0, slot3, slot2, slot1]; the old
  // outgoing over ray sits opposite the incoming one.
  int r = over_in_slot == 1 ? 1 : 3;
  std::array<int, 4> out{};
  for (int k = 0; k < 4; ++k)
    out[static_cast<std::size_t>(k)] = rev[static_cast<std::size_t>((r + k) % 4)];
  return out;
}

}  // namespace detail

// Structural validation: segment multiplicities, traversal coherence, and the
// symmetry of the code under sigma. Returns the checked diagram.
inline SymmetricDiagram validate(const DiagramData& candidate) {
  const int n = candidate.n;
  const int segs = 2 * n + 2;
  if (n < 1) fail_validate("n", "crossing count must be at least 1");

  SymmetricDiagram d;
  d.data_ = candidate;
  if (candidate.crossings.size() != static_cast<std::size_t>(n))
    fail_validate("crossings", "expected exactly n crossing records");
  for (std::size_t i = 0; i < candidate.crossings.size(); ++i) {
    const auto& c = candidate.crossings[i];
    if (c.id < 1 || c.id > n)
      fail_validate("crossings", "crossing id " + std::to_string(c.id) + " outside 1..n");
    if (!d.index_.emplace(c.id, i).second)
      fail_validate("crossings", "duplicate crossing id " + std::to_string(c.id));
    for (int s : c.pd)
      if (s < 1 || s > segs)
        fail_validate("crossings", "crossing " + std::to_string(c.id) + " uses segment label " +
                                       std::to_string(s) + " outside 1..2n+2");
  }
  for (int id : candidate.on_axis)
    if (!d.index_.count(id)) fail_validate("involution", "unknown on-axis crossing id " + std::to_string(id));
  for (const auto& pr : candidate.involution)
    for (int id : pr)
      if (!d.index_.count(id)) fail_validate("involution", "unknown crossing id " + std::to_string(id) + " in pair");

  auto succ = [&](int j) -> int {
    // +1 in 1..2n+2, never wrapping through a fixed point.
    if (j == n + 1 || j == segs || j < 1 || j > segs) return 0;
    return j + 1;
  };

  d.head_.assign(static_cast<std::size_t>(segs) + 1, SegmentEnd{});
  d.tail_.assign(static_cast<std::size_t>(segs) + 1, SegmentEnd{});
  std::vector<int> head_seen(static_cast<std::size_t>(segs) + 1, 0);
  std::vector<int> tail_seen(static_cast<std::size_t>(segs) + 1, 0);

  for (const auto& c : candidate.crossings) {
    const auto& pd = c.pd;
    const std::string at = "crossing " + std::to_string(c.id);
    if (succ(pd[0]) != pd[2])
      fail_validate("traversal", at + ": outgoing under strand is not the successor of the incoming one");
    int oi, slot;
    if (succ(pd[1]) == pd[3]) {
      oi = pd[1];
      slot = 1;
    } else if (succ(pd[3]) == pd[1]) {
      oi = pd[3];
      slot = 3;
    } else {
      fail_validate("traversal", at + ": over-strand slots are not consecutive segments");
    }
    d.over_in_[c.id] = oi;
    d.over_in_slot_[c.id] = slot;

    auto record_head = [&](int seg, int s) {
      ++head_seen[static_cast<std::size_t>(seg)];
      d.head_[static_cast<std::size_t>(seg)] = SegmentEnd{c.id, s};
    };
    auto record_tail = [&](int seg, int s) {
      ++tail_seen[static_cast<std::size_t>(seg)];
      d.tail_[static_cast<std::size_t>(seg)] = SegmentEnd{c.id, s};
    };
    record_head(pd[0], 0);
    record_tail(pd[2], 2);
    record_head(oi, slot);
    record_tail(oi + 1, slot == 1 ? 3 : 1);
  }

  for (int j = 1; j <= segs; ++j) {
    int want_head = (j == n + 1 || j == segs) ? 0 : 1;
    int want_tail = (j == 1 || j == n + 2) ? 0 : 1;
    if (head_seen[static_cast<std::size_t>(j)] != want_head || tail_seen[static_cast<std::size_t>(j)] != want_tail)
      fail_validate("multiplicity", "segment " + std::to_string(j) + " has inconsistent occurrences in the code");
  }

  // Involution bookkeeping: on-axis crossings are their own image, each
  // off-axis crossing appears in exactly one pair.
  for (int id : candidate.on_axis) {
    if (!d.on_axis_.insert(id).second)
      fail_validate("involution", "crossing " + std::to_string(id) + " listed on the axis twice");
    d.partner_[id] = id;
  }
  for (const auto& pr : candidate.involution) {
    if (pr[0] == pr[1])
      fail_validate("involution", "involution pair may not repeat crossing " + std::to_string(pr[0]));
    for (int id : pr) {
      if (d.on_axis_.count(id))
        fail_validate("involution", "on-axis crossing " + std::to_string(id) + " cannot be paired");
      if (d.partner_.count(id))
        fail_validate("involution", "crossing " + std::to_string(id) + " appears in more than one pair");
    }
    d.partner_[pr[0]] = pr[1];
    d.partner_[pr[1]] = pr[0];
  }
  for (const auto& c : candidate.crossings)
    if (!d.partner_.count(c.id))
      fail_validate("involution", "crossing " + std::to_string(c.id) + " is neither on the axis nor paired");

  // Symmetry of the code under sigma.
  for (const auto& c : candidate.crossings) {
    auto expect = detail::expected_mirror_pd(c.pd, d.over_in_slot_[c.id], segs);
    const auto& actual = d.crossing(d.partner_[c.id]).pd;
    if (expect != actual) {
      if (d.partner_[c.id] == c.id)
        fail_validate("symmetry", "on-axis crossing " + std::to_string(c.id) + " is not its own mirror image");
      fail_validate("symmetry", "crossing " + std::to_string(c.id) + " and its partner " +
                                    std::to_string(d.partner_[c.id]) + " are not mirror images");
    }
  }
  return d;
}

enum class Arc { a, b };
enum class StrandClass { aa, ab, bb };
enum class SignMode { traversal, ab };

inline const char* to_string(StrandClass c) {
  switch (c) {
    case StrandClass::aa: return "aa";
    case StrandClass::ab: return "ab";
    default: return "bb";
  }
}

struct ArcClassification {
  std::vector<Arc> segment_arc;  // 1-based
  struct Entry {
    StrandClass cls = StrandClass::ab;
    bool on_axis = false;
  };
  std::map<int, Entry> crossings;
};

inline Arc arc_of_segment(const SymmetricDiagram& d, int seg) {
  return seg <= d.n() + 1 ? Arc::a : Arc::b;
}

// Segments 1..n+1 form arc a (F0 to F1), the rest arc b; a crossing's class
// records which arcs its two strands belong to.
inline ArcClassification classify_strands(const SymmetricDiagram& d) {
  ArcClassification out;
  out.segment_arc.resize(static_cast<std::size_t>(d.segment_count()) + 1);
  for (int j = 1; j <= d.segment_count(); ++j)
    out.segment_arc[static_cast<std::size_t>(j)] = arc_of_segment(d, j);
  for (const auto& c : d.data().crossings) {
    Arc u = arc_of_segment(d, c.pd[0]);
    Arc o = arc_of_segment(d, d.over_in(c.id));
    ArcClassification::Entry e;
    if (u == o)
      e.cls = (u == Arc::a) ? StrandClass::aa : StrandClass::bb;
    else
      e.cls = StrandClass::ab;
    e.on_axis = d.is_on_axis(c.id);
    out.crossings[c.id] = e;
  }
  return out;
}

// Traversal mode: +1 iff the over strand runs slot 3 -> slot 1 (0-indexed),
// i.e. the incoming over strand occupies the last pd slot. In ab mode arc b
// carries the reversed orientation, which flips the sign of every ab
// crossing.
inline int crossing_sign(const SymmetricDiagram& d, int id, SignMode mode) {
  int trav = d.over_in_slot(id) == 3 ? 1 : -1;
  if (mode == SignMode::traversal) return trav;
  Arc u = arc_of_segment(d, d.under_in(id));
  Arc o = arc_of_segment(d, d.over_in(id));
  if (u == o)
    throw std::invalid_argument("crossing_sign: ab mode requested on an aa or bb crossing");
  return -trav;
}

}  // namespace eqsig
