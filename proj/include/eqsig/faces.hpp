#pragma once

#include <array>
#include <map>
#include <vector>

#include "eqsig/diagram.hpp"
#include "eqsig/errors.hpp"

namespace eqsig {

// A face boundary step: segment traveled forward or backward, with the face
// lying on the left of the travel direction.
struct FaceStep {
  int seg = 0;
  bool forward = true;
  bool operator==(const FaceStep& o) const { return seg == o.seg && forward == o.forward; }
};

struct FaceComplex {
  std::vector<std::vector<FaceStep>> faces;
  // side_face[seg] = {face at (seg,left), face at (seg,right)}; 1-based.
  std::vector<std::array<int, 2>> side_face;
  // corner_faces[crossing id][k] = face in the corner between pd slots k and
  // k+1 (mod 4).
  std::map<int, std::array<int, 4>> corner_faces;

  int face_at(int seg, Side s) const {
    return side_face[static_cast<std::size_t>(seg)][s == Side::left ? 0 : 1];
  }
  std::size_t face_count() const { return faces.size(); }
};

namespace detail {

struct Ray {
  int seg = 0;
  bool arrival = false;  // the segment's head is at this vertex
};

// Rotation system of the underlying 4-valent graph, fixed points included as
// transparent degree-2 vertices. Vertex keys: crossing ids, 0 for F0, -1 for
// F1.
struct RotationSystem {
  std::map<int, std::vector<Ray>> rays;               // counterclockwise order
  std::map<int, std::pair<int, int>> head_ray;        // seg -> (vertex, ray index)
  std::map<int, std::pair<int, int>> tail_ray;

  explicit RotationSystem(const SymmetricDiagram& d) {
    const int n = d.n();
    for (const auto& c : d.data().crossings) {
      std::vector<Ray> r(4);
      int oi_slot = d.over_in_slot(c.id);
      for (int k = 0; k < 4; ++k) {
        bool arr = (k == 0) || (k == oi_slot);
        r[static_cast<std::size_t>(k)] = Ray{c.pd[static_cast<std::size_t>(k)], arr};
      }
      rays[c.id] = r;
    }
    rays[0] = {Ray{2 * n + 2, true}, Ray{1, false}};    // F0
    rays[-1] = {Ray{n + 1, true}, Ray{n + 2, false}};   // F1
    for (const auto& [v, list] : rays)
      for (int k = 0; k < static_cast<int>(list.size()); ++k) {
        const Ray& r = list[static_cast<std::size_t>(k)];
        if (r.arrival)
          head_ray[r.seg] = {v, k};
        else
          tail_ray[r.seg] = {v, k};
      }
  }
};

}  // namespace detail

// Face tracing by the rotation system: arriving at a vertex, leave along the
// next ray clockwise (previous in counterclockwise order), which keeps the
// traced face on the left of travel. Fixed points are transparent. The Euler
// relation V - E + F = 2 forces F = n + 2; anything else means the code is
// not a planar diagram.
inline FaceComplex trace_faces(const SymmetricDiagram& d) {
  const int segs = d.segment_count();
  detail::RotationSystem rot(d);

  auto next_step = [&](const FaceStep& s) -> FaceStep {
    auto [v, idx] = s.forward ? rot.head_ray.at(s.seg) : rot.tail_ray.at(s.seg);
    const auto& list = rot.rays.at(v);
    int deg = static_cast<int>(list.size());
    const detail::Ray& out = list[static_cast<std::size_t>((idx + deg - 1) % deg)];
    return FaceStep{out.seg, !out.arrival};
  };

  FaceComplex fc;
  fc.side_face.assign(static_cast<std::size_t>(segs) + 1, {-1, -1});
  auto side_slot = [&](const FaceStep& s) -> int& {
    return fc.side_face[static_cast<std::size_t>(s.seg)][s.forward ? 0 : 1];
  };

  for (int seg = 1; seg <= segs; ++seg) {
    for (bool fwd : {true, false}) {
      FaceStep start{seg, fwd};
      if (side_slot(start) != -1) continue;
      int id = static_cast<int>(fc.faces.size());
      std::vector<FaceStep> orbit;
      FaceStep cur = start;
      do {
        if (side_slot(cur) != -1)
          fail_validate("faces", "face tracing revisited a segment side; corrupt code");
        side_slot(cur) = id;
        orbit.push_back(cur);
        cur = next_step(cur);
      } while (!(cur == start));
      fc.faces.push_back(std::move(orbit));
    }
  }

  if (fc.faces.size() != static_cast<std::size_t>(d.n() + 2))
    fail_validate("euler", "face count " + std::to_string(fc.faces.size()) + " violates V-E+F=2 (expected " +
                               std::to_string(d.n() + 2) + "); not a planar diagram");

  // Corner between rays k and k+1 = face kept on the left when arriving
  // along ray k+1.
  for (const auto& c : d.data().crossings) {
    const auto& list = rot.rays.at(c.id);
    std::array<int, 4> corners{};
    for (int k = 0; k < 4; ++k) {
      const detail::Ray& r = list[static_cast<std::size_t>((k + 1) % 4)];
      FaceStep arriving{r.seg, r.arrival};  // forward if this vertex is the head
      corners[static_cast<std::size_t>(k)] =
          fc.side_face[static_cast<std::size_t>(r.seg)][arriving.forward ? 0 : 1];
    }
    fc.corner_faces[c.id] = corners;
  }
  return fc;
}

struct Shading {
  std::vector<bool> shaded;  // by face id
  int r_infinity = -1;       // the face containing the unmarked half-axis h'

  std::size_t unshaded_count() const {
    std::size_t k = 0;
    for (bool s : shaded)
      if (!s) ++k;
    return k;
  }
};

// Checkerboard coloring with the shaded class chosen to contain h. Verifies
// the combinatorial admissibility conditions at both fixed points: h must
// start and end in the shaded class, and the faces on the opposite sides must
// agree (the region holding h', which may not meet the diagram).
inline Shading checkerboard(const SymmetricDiagram& d, const FaceComplex& fc) {
  const int nfaces = static_cast<int>(fc.face_count());
  std::vector<int> color(static_cast<std::size_t>(nfaces), -1);
  std::vector<int> stack;
  color[0] = 0;
  stack.push_back(0);
  while (!stack.empty()) {
    int f = stack.back();
    stack.pop_back();
    for (int seg = 1; seg <= d.segment_count(); ++seg) {
      int l = fc.face_at(seg, Side::left), r = fc.face_at(seg, Side::right);
      if (l != f && r != f) continue;
      int g = l == f ? r : l;
      if (color[static_cast<std::size_t>(g)] == -1) {
        color[static_cast<std::size_t>(g)] = 1 - color[static_cast<std::size_t>(f)];
        stack.push_back(g);
      } else if (color[static_cast<std::size_t>(g)] == color[static_cast<std::size_t>(f)]) {
        fail_validate("coloring", "checkerboard coloring conflict; corrupt code");
      }
    }
  }
  for (int c : color)
    if (c == -1) fail_validate("coloring", "disconnected face adjacency; corrupt code");

  Shading sh;
  int h_start = fc.face_at(1, d.data().h_side_at_start);
  int h_end = fc.face_at(d.n() + 1, d.data().h_side_at_end);
  int shaded_color = color[static_cast<std::size_t>(h_start)];
  sh.shaded.resize(static_cast<std::size_t>(nfaces));
  for (int f = 0; f < nfaces; ++f)
    sh.shaded[static_cast<std::size_t>(f)] = color[static_cast<std::size_t>(f)] == shaded_color;

  if (!sh.shaded[static_cast<std::size_t>(h_end)])
    fail_admissible("h_end_shading",
                    "the face where h reaches F1 is not in the checkerboard class containing h");
  int r0 = fc.face_at(1, opposite(d.data().h_side_at_start));
  int r1 = fc.face_at(d.n() + 1, opposite(d.data().h_side_at_end));
  if (r0 != r1)
    fail_admissible("h_prime_face",
                    "the half-axis h' would have to cross the diagram: its faces at F0 and F1 differ");
  sh.r_infinity = r0;
  if (sh.shaded[static_cast<std::size_t>(sh.r_infinity)])
    fail_internal("shading", "r_infinity landed in the shaded class");
  return sh;
}

struct RegionInvolution {
  std::vector<int> image;  // face id -> face id
  int operator()(int f) const { return image[static_cast<std::size_t>(f)]; }
};

// The diagram symmetry sends the face at (segment, side) to the face at
// (sigma(segment), same side): the reflection flips handedness and reverses
// the traversal, which cancel in side naming.
inline RegionInvolution region_involution(const SymmetricDiagram& d, const FaceComplex& fc) {
  RegionInvolution ri;
  ri.image.assign(fc.face_count(), -1);
  for (int seg = 1; seg <= d.segment_count(); ++seg) {
    for (Side s : {Side::left, Side::right}) {
      int f = fc.face_at(seg, s);
      int g = fc.face_at(d.sigma(seg), s);
      int& slot = ri.image[static_cast<std::size_t>(f)];
      if (slot == -1)
        slot = g;
      else if (slot != g)
        fail_validate("region_involution",
                      "diagram symmetry does not induce a well-defined map on faces");
    }
  }
  for (std::size_t f = 0; f < ri.image.size(); ++f) {
    int g = ri.image[f];
    if (g < 0 || ri.image[static_cast<std::size_t>(g)] != static_cast<int>(f))
      fail_validate("region_involution", "induced face map is not an involution");
  }
  return ri;
}

}  // namespace eqsig
