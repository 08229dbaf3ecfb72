#pragma once

#include <cstdlib>
#include <sstream>
#include <string>

#include <json.hpp>

#include "eqsig/diagram.hpp"
#include "eqsig/exact.hpp"
#include "eqsig/faces.hpp"
#include "eqsig/goeritz.hpp"

namespace eqsig {

// Relative Euler number of the admissible checkerboard surface:
// minus the sum of epsilon over off-axis crossings between the arcs a and b.
inline long correction_term(const SymmetricDiagram& d) {
  auto cls = classify_strands(d);
  long sum = 0;
  for (const auto& [id, entry] : cls.crossings)
    if (!entry.on_axis && entry.cls == StrandClass::ab)
      sum += crossing_sign(d, id, SignMode::ab);
  if (sum % 2 != 0) fail_internal("correction", "correction term came out odd");
  return -sum;
}

// Proof-level route to the same number: sum of eta over axis crossings minus
// the epsilon sum over all a-b crossings. The axis terms cancel because
// eta = epsilon_ab there; a mismatch with correction_term means a sign
// convention is broken somewhere.
inline long correction_term_crosscheck(const SymmetricDiagram& d, const FaceComplex& fc,
                                       const Shading& sh) {
  auto cls = classify_strands(d);
  long eta_sum = 0, eps_sum = 0;
  for (const auto& [id, entry] : cls.crossings) {
    if (entry.on_axis) eta_sum += goeritz_eta(d, fc, sh, id);
    if (entry.cls == StrandClass::ab) eps_sum += crossing_sign(d, id, SignMode::ab);
  }
  return eta_sum - eps_sum;
}

inline long g_signature(const SymIntMatrix& m_plus, const SymIntMatrix& m_minus) {
  return signature(m_plus).signature() - signature(m_minus).signature();
}

// True iff the strand alternates under/over at successive crossing passages
// along the traversal (fixed points are transparent).
inline bool is_alternating(const SymmetricDiagram& d) {
  std::vector<int> passes;  // 1 = under, 0 = over, in traversal order
  for (int seg = 1; seg <= d.segment_count(); ++seg) {
    SegmentEnd head = d.head_of(seg);
    if (head.is_fixed_point()) continue;
    passes.push_back(head.slot == 0 ? 1 : 0);
  }
  for (std::size_t i = 0; i < passes.size(); ++i)
    if (passes[i] == passes[(i + 1) % passes.size()]) return false;
  return true;
}

// For alternating admissible diagrams the g-signature vanishes and the
// invariant reduces to the off-axis a-b crossing sign sum.
inline long alternating_fast_path(const SymmetricDiagram& d) {
  if (!is_alternating(d))
    throw std::invalid_argument("alternating_fast_path: diagram is not alternating");
  return -correction_term(d);
}

inline long butterfly_lower_bound(long sigma_tilde) { return (std::labs(sigma_tilde) + 1) / 2; }

struct InvariantReport {
  std::string name;
  int n = 0;
  bool alternating = false;
  long e = 0;           // correction term
  long gsig = 0;        // sign(W, rho~) = sigma(E+) - sigma(E-)
  long sigma_tilde = 0; // gsig - e
  long bg4_lower = 0;   // ceil(|sigma_tilde| / 2)

  // Intermediates, kept so sign-convention trouble stays diagnosable.
  GoeritzData goeritz;
  EigenSplit split;
  SymIntMatrix m_plus, m_minus;
  SignatureTriple sig_plus, sig_minus, sig_goeritz;
  std::size_t unshaded_regions = 0;
  std::size_t invariant_basis_regions = 0;  // flagged: invariant unshaded regions other than r_infinity
};

// Full pipeline: faces -> shading -> region involution -> Goeritz -> eigen
// split -> signatures -> correction term.
inline InvariantReport sigma_tilde(const SymmetricDiagram& d) {
  FaceComplex fc = trace_faces(d);
  Shading sh = checkerboard(d, fc);
  RegionInvolution ri = region_involution(d, fc);
  if (ri(sh.r_infinity) != sh.r_infinity)
    fail_internal("region_involution", "r_infinity is not fixed by the region involution");
  for (std::size_t f = 0; f < fc.face_count(); ++f)
    if (sh.shaded[f] != sh.shaded[static_cast<std::size_t>(ri(static_cast<int>(f)))])
      fail_internal("region_involution", "region involution does not preserve the shading");

  InvariantReport r;
  r.name = d.name();
  r.n = d.n();
  r.goeritz = goeritz_matrix(d, fc, sh, ri);
  r.split = eigen_split(r.goeritz, ri);
  auto forms = restricted_forms(r.goeritz, r.split);
  r.m_plus = forms.first;
  r.m_minus = forms.second;
  r.sig_plus = signature(r.m_plus);
  r.sig_minus = signature(r.m_minus);
  r.sig_goeritz = signature(r.goeritz.matrix);
  if (r.sig_plus.signature() + r.sig_minus.signature() != r.sig_goeritz.signature())
    fail_internal("congruence", "eigenspace signatures do not add up to the Goeritz signature");

  r.e = correction_term(d);
  long e2 = correction_term_crosscheck(d, fc, sh);
  if (r.e != e2)
    fail_internal("crosscheck", "correction term " + std::to_string(r.e) +
                                    " disagrees with its crosscheck " + std::to_string(e2));
  r.gsig = r.sig_plus.signature() - r.sig_minus.signature();
  r.sigma_tilde = r.gsig - r.e;
  r.alternating = is_alternating(d);
  if (r.alternating) {
    if (r.gsig != 0)
      fail_internal("alternating", "alternating diagram with nonzero g-signature");
    if (alternating_fast_path(d) != r.sigma_tilde)
      fail_internal("alternating", "fast path disagrees with the full pipeline");
  }
  r.bg4_lower = butterfly_lower_bound(r.sigma_tilde);
  r.unshaded_regions = sh.unshaded_count();
  r.invariant_basis_regions = r.split.invariant_regions.size();
  return r;
}

namespace detail {

inline nlohmann::ordered_json matrix_json(const SymIntMatrix& m) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(m.at(i, j).get_str());
    rows.push_back(row);
  }
  return rows;
}

inline std::string matrix_text(const SymIntMatrix& m, const std::string& indent) {
  std::ostringstream os;
  if (m.dim() == 0) {
    os << indent << "(empty 0x0 matrix)\n";
    return os.str();
  }
  std::size_t width = 1;
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j)
      width = std::max(width, m.at(i, j).get_str().size());
  for (std::size_t i = 0; i < m.dim(); ++i) {
    os << indent << "[";
    for (std::size_t j = 0; j < m.dim(); ++j) {
      std::string s = m.at(i, j).get_str();
      os << std::string(width - s.size() + (j ? 1 : 0), ' ') << s;
    }
    os << " ]\n";
  }
  return os.str();
}

}  // namespace detail

inline nlohmann::ordered_json report_json(const InvariantReport& r) {
  nlohmann::ordered_json j;
  j["name"] = r.name;
  j["n"] = r.n;
  j["alternating"] = r.alternating;
  j["e"] = r.e;
  j["gsig"] = r.gsig;
  j["sigma_tilde"] = r.sigma_tilde;
  j["bg4_lower"] = r.bg4_lower;
  nlohmann::ordered_json inter;
  inter["basis"] = r.goeritz.basis;
  inter["goeritz_matrix"] = detail::matrix_json(r.goeritz.matrix);
  inter["m_plus"] = detail::matrix_json(r.m_plus);
  inter["m_minus"] = detail::matrix_json(r.m_minus);
  inter["sig_plus"] = {{"p", r.sig_plus.p}, {"q", r.sig_plus.q}, {"z", r.sig_plus.z}};
  inter["sig_minus"] = {{"p", r.sig_minus.p}, {"q", r.sig_minus.q}, {"z", r.sig_minus.z}};
  inter["sig_goeritz"] = {{"p", r.sig_goeritz.p}, {"q", r.sig_goeritz.q}, {"z", r.sig_goeritz.z}};
  inter["unshaded_regions"] = r.unshaded_regions;
  inter["invariant_basis_regions"] = r.invariant_basis_regions;
  j["intermediates"] = inter;
  return j;
}

inline std::string render_report(const InvariantReport& r) {
  std::ostringstream os;
  os << r.name << ": n=" << r.n << (r.alternating ? ", alternating" : "") << "\n"
     << "  g-signature  " << r.gsig << "   (sigma(E+)=" << r.sig_plus.signature()
     << ", sigma(E-)=" << r.sig_minus.signature() << ")\n"
     << "  e            " << r.e << "\n"
     << "  sigma~       " << r.sigma_tilde << "\n"
     << "  bg4 >=       " << r.bg4_lower << "\n";
  return os.str();
}

}  // namespace eqsig
