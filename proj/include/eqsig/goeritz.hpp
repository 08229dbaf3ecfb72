#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "eqsig/diagram.hpp"
#include "eqsig/exact.hpp"
#include "eqsig/faces.hpp"

namespace eqsig {

// Goeritz type sign of a crossing with respect to the shaded surface: +1 when
// the corners between pd slots 2-3 and 4-1 are shaded. The convention is
// pinned by the identity eta(c) = epsilon_ab(c) on axis crossings.
inline int goeritz_eta(const SymmetricDiagram& d, const FaceComplex& fc, const Shading& sh,
                       int crossing_id) {
  const auto& corners = fc.corner_faces.at(crossing_id);
  bool shaded13 = sh.shaded[static_cast<std::size_t>(corners[1])];
  if (shaded13 != sh.shaded[static_cast<std::size_t>(corners[3])])
    fail_internal("eta", "opposite corners of a crossing differ in shading");
  return shaded13 ? 1 : -1;
}

// Unshaded-region basis of the admissible checkerboard surface and the
// integer Goeritz matrix over it. The r_infinity row/column is dropped.
struct GoeritzData {
  std::vector<int> basis;  // face ids; paired regions first (representatives,
                           // then partners in the same order), invariant
                           // regions last
  SymIntMatrix matrix;

  int basis_index(int face) const {
    auto it = std::find(basis.begin(), basis.end(), face);
    return it == basis.end() ? -1 : static_cast<int>(it - basis.begin());
  }
};

inline GoeritzData goeritz_matrix(const SymmetricDiagram& d, const FaceComplex& fc,
                                  const Shading& sh, const RegionInvolution& ri) {
  GoeritzData out;

  std::vector<int> reps, partners, invariant;
  for (int f = 0; f < static_cast<int>(fc.face_count()); ++f) {
    if (sh.shaded[static_cast<std::size_t>(f)] || f == sh.r_infinity) continue;
    int g = ri(f);
    if (g == f) {
      invariant.push_back(f);
    } else if (f < g) {
      reps.push_back(f);
      partners.push_back(g);
    }
  }
  out.basis = reps;
  out.basis.insert(out.basis.end(), partners.begin(), partners.end());
  out.basis.insert(out.basis.end(), invariant.begin(), invariant.end());

  // Full matrix over all unshaded regions, r_infinity included: off-diagonal
  // G_ij = -sum of eta over crossings whose unshaded corners meet R_i and
  // R_j; diagonals make every row sum to zero. Crossings with both unshaded
  // corners in one region drop out entirely.
  std::vector<int> unshaded = out.basis;
  unshaded.push_back(sh.r_infinity);
  std::map<int, std::size_t> pos;
  for (std::size_t i = 0; i < unshaded.size(); ++i) pos[unshaded[i]] = i;

  SymIntMatrix full(unshaded.size());
  for (const auto& c : d.data().crossings) {
    const auto& corners = fc.corner_faces.at(c.id);
    int f, g;
    if (!sh.shaded[static_cast<std::size_t>(corners[0])]) {
      f = corners[0];
      g = corners[2];
    } else {
      f = corners[1];
      g = corners[3];
    }
    if (f == g) continue;
    full.add(pos.at(f), pos.at(g), -goeritz_eta(d, fc, sh, c.id));
  }
  for (std::size_t i = 0; i < unshaded.size(); ++i) {
    mpz_class row = 0;
    for (std::size_t j = 0; j < unshaded.size(); ++j)
      if (j != i) row += full.at(i, j);
    full.set(i, i, -row);
  }

  out.matrix = SymIntMatrix(out.basis.size());
  for (std::size_t i = 0; i < out.basis.size(); ++i)
    for (std::size_t j = i; j < out.basis.size(); ++j)
      out.matrix.set(i, j, full.at(i, j));
  return out;
}

// Integer bases of the +1 and -1 eigenspaces of the involution on H_1 of the
// shaded surface, in Goeritz basis coordinates. The involution acts on region
// classes by x -> -x', so a swapped pair contributes x - x' to E+ and x + x'
// to E-; an invariant region contributes x to E-.
struct EigenSplit {
  struct Pair {
    int rep = -1;
    int partner = -1;
  };
  std::vector<Pair> pairs;
  std::vector<int> invariant_regions;  // face ids, r_infinity excluded
  std::vector<std::vector<mpz_class>> plus_basis, minus_basis;
};

inline EigenSplit eigen_split(const GoeritzData& gz, const RegionInvolution& ri) {
  EigenSplit out;
  const std::size_t dim = gz.basis.size();
  for (std::size_t i = 0; i < dim; ++i) {
    int f = gz.basis[i];
    int g = ri(f);
    if (gz.basis_index(g) < 0)
      fail_internal("eigen_split", "involution does not preserve the Goeritz basis");
    if (g == f) {
      out.invariant_regions.push_back(f);
      std::vector<mpz_class> v(dim);
      v[i] = 1;
      out.minus_basis.push_back(std::move(v));
    } else if (f < g) {
      out.pairs.push_back({f, g});
      std::size_t j = static_cast<std::size_t>(gz.basis_index(g));
      std::vector<mpz_class> plus(dim), minus(dim);
      plus[i] = 1;
      plus[j] = -1;
      minus[i] = 1;
      minus[j] = 1;
      out.plus_basis.push_back(std::move(plus));
      out.minus_basis.push_back(std::move(minus));
    }
  }
  if (out.plus_basis.size() + out.minus_basis.size() != dim)
    fail_internal("eigen_split", "eigenspace bases do not fill the lattice");
  return out;
}

// Restrictions of the Goeritz form to the two eigenspace bases.
inline std::pair<SymIntMatrix, SymIntMatrix> restricted_forms(const GoeritzData& gz,
                                                              const EigenSplit& split) {
  return {gz.matrix.congruent_by_columns(split.plus_basis),
          gz.matrix.congruent_by_columns(split.minus_basis)};
}

}  // namespace eqsig
