#pragma once

#include <array>
#include <string>

#include "eqsig/diagram.hpp"

namespace eqsig {

// Re-encode the same directed diagram with the traversal run the other way
// around the knot: segments relabel through sigma, pd tuples rotate so the
// old outgoing under strand becomes the new incoming one, and both h sides
// flip because segment 1 now leaves F0 along the opposite strand end. The
// direction data (marked half-axis and its orientation) is untouched.
inline SymmetricDiagram reverse_traversal(const SymmetricDiagram& d) {
  DiagramData out = d.data();
  auto sig = [&](int j) { return d.sigma(j); };
  for (auto& c : out.crossings) {
    auto t = c.pd;
    c.pd = {sig(t[2]), sig(t[3]), sig(t[0]), sig(t[1])};
  }
  out.h_side_at_start = opposite(out.h_side_at_start);
  out.h_side_at_end = opposite(out.h_side_at_end);
  return validate(out);
}

// Equivariant connect sum: splice d2's F0 into d1's F1. Segment n1+1 of d1
// merges with segment 1 of d2, and segment 2n2+2 of d2 merges with segment
// n1+2 of d1; the join runs parallel to the axis and adds no crossings.
// The joined half-axis h(d1) followed by h(d2) passes the junction strand on
// one side, so d2 is re-encoded if its h side at F0 does not chain with d1's
// at F1.
inline SymmetricDiagram connect_sum(const SymmetricDiagram& d1, const SymmetricDiagram& a2) {
  const SymmetricDiagram d2 =
      d1.data().h_side_at_end == a2.data().h_side_at_start ? a2 : reverse_traversal(a2);
  const int n1 = d1.n(), n2 = d2.n();
  auto relabel1 = [&](int seg) { return seg <= n1 + 1 ? seg : seg + 2 * n2; };
  auto relabel2 = [&](int seg) { return seg + n1; };

  DiagramData out;
  out.name = d1.name() + " # " + d2.name();
  out.n = n1 + n2;
  for (const auto& c : d1.data().crossings) {
    CrossingRecord r;
    r.id = c.id;
    for (int k = 0; k < 4; ++k)
      r.pd[static_cast<std::size_t>(k)] = relabel1(c.pd[static_cast<std::size_t>(k)]);
    out.crossings.push_back(r);
  }
  for (const auto& c : d2.data().crossings) {
    CrossingRecord r;
    r.id = c.id + n1;
    for (int k = 0; k < 4; ++k)
      r.pd[static_cast<std::size_t>(k)] = relabel2(c.pd[static_cast<std::size_t>(k)]);
    out.crossings.push_back(r);
  }
  for (int id : d1.data().on_axis) out.on_axis.push_back(id);
  for (int id : d2.data().on_axis) out.on_axis.push_back(id + n1);
  for (const auto& pr : d1.data().involution) out.involution.push_back(pr);
  for (const auto& pr : d2.data().involution)
    out.involution.push_back({pr[0] + n1, pr[1] + n1});
  out.h_side_at_start = d1.data().h_side_at_start;
  out.h_side_at_end = d2.data().h_side_at_end;
  return validate(out);
}

// Mirror image: over/under swapped at every crossing with the planar
// structure unchanged. The pd tuple rotates so the old incoming over strand
// becomes the new incoming under. Symmetry data, axis data, and the marked
// half-axis carry over verbatim.
inline SymmetricDiagram mirror(const SymmetricDiagram& d) {
  DiagramData out = d.data();
  out.name = "m" + d.name();
  for (auto& c : out.crossings) {
    int r = d.over_in_slot(c.id);  // new slot 0
    std::array<int, 4> pd{};
    for (int k = 0; k < 4; ++k)
      pd[static_cast<std::size_t>(k)] = c.pd[static_cast<std::size_t>((r + k) % 4)];
    c.pd = pd;
  }
  return validate(out);
}

}  // namespace eqsig
