#pragma once

#include <functional>
#include <string>
#include <vector>

#include "eqsig/diagram.hpp"
#include "eqsig/errors.hpp"

namespace eqsig {

// Smallest admissible diagram: the unknot with a single kink placed on the
// axis. Both basis sets downstream are empty and the invariant vanishes.
inline SymmetricDiagram build_unknot_axis_kink() {
  DiagramData d;
  d.name = "unknot";
  d.n = 1;
  d.crossings = {{1, {3, 1, 4, 2}}};
  d.on_axis = {1};
  d.h_side_at_start = Side::right;
  d.h_side_at_end = Side::left;
  return validate(d);
}

// Torus knot T(2,2n+1) as a vertical twist region of 2n+1 crossings with the
// axis through the middle crossing and closure arcs through the two fixed
// points. Crossing i counts from the top of the twist; the first traversal
// pass descends the whole twist, the second descends it again after rounding
// F1. Alternating, writhe 2n+1.
inline SymmetricDiagram build_torus_2_odd(int n) {
  if (n < 1) throw std::invalid_argument("build_torus_2_odd: n must be >= 1");
  const int m = 2 * n + 1;
  DiagramData d;
  d.name = "T(2," + std::to_string(m) + ")";
  d.n = m;
  for (int i = 1; i <= m; ++i) {
    CrossingRecord c;
    c.id = i;
    if (i % 2 == 1)
      c.pd = {i, m + 2 + i, i + 1, m + 1 + i};
    else
      c.pd = {m + 1 + i, i + 1, m + 2 + i, i};
    d.crossings.push_back(c);
  }
  d.on_axis = {n + 1};
  for (int i = 1; i <= n; ++i) d.involution.push_back({i, m + 1 - i});
  d.h_side_at_start = Side::right;
  d.h_side_at_end = Side::left;
  return validate(d);
}

enum class Direction { plus, minus };

// The two directed versions of one strong inversion on the knot 7_4
// (two-bridge, continued fraction [3,1,3], determinant 15).
//
// plus: the 7-crossing palindromic alternating plat. Crossings 1-3 form the
// upper twist region (top to bottom: 1 highest), 5-7 their mirror images, and
// 4 is the central crossing on the axis. The marked half-axis runs from F0
// around the far side of the diagram through the central crossing to F1.
//
// minus: the same knot with the other half-axis marked, redrawn so that the
// marked arc between the fixed points carries the only axis crossing (id 6,
// the clasp). Crossings 1-3 are the twist region as before; 4 and 5 are where
// the clasp pierces the strand near F1; 7-11 mirror 1-5. Eleven crossings.
//
// Unshaded basis regions of the minus diagram, in matrix order: a = the twist
// eye between crossings 2 and 3, b = the eye between 1 and 2, c = the outer
// region above the diagram, d = the pocket at the clasp; then their mirror
// images a', b', c', d' in the same order.
inline SymmetricDiagram build_7_4(Direction dir) {
  DiagramData d;
  if (dir == Direction::plus) {
    d.name = "7_4b+";
    d.n = 7;
    d.crossings = {
        {1, {9, 4, 10, 3}},  {2, {2, 11, 3, 10}}, {3, {11, 2, 12, 1}}, {4, {4, 13, 5, 12}},
        {5, {13, 8, 14, 7}}, {6, {6, 15, 7, 14}}, {7, {15, 6, 16, 5}},
    };
    d.on_axis = {4};
    d.involution = {{1, 5}, {2, 6}, {3, 7}};
    d.h_side_at_start = Side::left;
    d.h_side_at_end = Side::right;
  } else {
    d.name = "7_4b-";
    d.n = 11;
    d.crossings = {
        {1, {15, 4, 16, 3}},  {2, {2, 17, 3, 16}},   {3, {17, 2, 18, 1}},
        {4, {4, 15, 5, 14}},  {5, {13, 18, 14, 19}}, {6, {5, 20, 6, 19}},
        {7, {21, 10, 22, 9}}, {8, {8, 23, 9, 22}},   {9, {23, 8, 24, 7}},
        {10, {10, 21, 11, 20}}, {11, {6, 11, 7, 12}},
    };
    d.on_axis = {6};
    d.involution = {{1, 7}, {2, 8}, {3, 9}, {4, 10}, {5, 11}};
    d.h_side_at_start = Side::right;
    d.h_side_at_end = Side::left;
  }
  return validate(d);
}

struct CatalogEntry {
  std::string key;
  std::string summary;
  bool takes_n = false;
  std::function<SymmetricDiagram(int)> build;  // n ignored unless takes_n
};

inline const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = {
      {"unknot", "unknot with one kink on the axis", false,
       [](int) { return build_unknot_axis_kink(); }},
      {"torus", "torus knot T(2,2n+1), parameter n >= 1", true,
       [](int n) { return build_torus_2_odd(n); }},
      {"7_4b_plus", "directed strong inversion on 7_4, first direction (alternating)", false,
       [](int) { return build_7_4(Direction::plus); }},
      {"7_4b_minus", "directed strong inversion on 7_4, second direction", false,
       [](int) { return build_7_4(Direction::minus); }},
  };
  return entries;
}

inline const CatalogEntry* catalog_find(const std::string& key) {
  for (const auto& e : catalog())
    if (e.key == key) return &e;
  return nullptr;
}

}  // namespace eqsig
