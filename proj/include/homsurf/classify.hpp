#pragma once

#include <string>

#include "homsurf/invariants.hpp"
#include "homsurf/surface.hpp"
#include "homsurf/types.hpp"

namespace homsurf {

struct ClassificationReport {
  SurfaceKind kind = SurfaceKind::TypeA;
  Cov2Field ricci;
  int rank = 0;
  bool flat = false;
  AlphaEpsilon alpha;  // defined only on the rank-1 branches
  int killing_dim = 0;
  std::string algebra;
  bool is_typeA = false, is_typeB = false, is_typeC = false;
  std::string soliton_class = "none";
  std::string model_name;  // empty when no catalog match applies
  double model_param_a = 0, model_param_c = 0;
  Mat2 to_normalized = Mat2::Identity();  // u = T x reaching the normal form
  std::string note;
  bool has_typeb_invariants = false;
  TypeBInvariants typeb;
};

// Full classification: Ricci rank, (alpha, eps) table row, Killing dimension,
// Lie algebra label, realizability flags, soliton branch, model recognition.
// Flat surfaces raise FlatSurface unless flat_report is set.
ClassificationReport classify(const AffineSurface& s, double tol = 1e-9,
                              bool flat_report = false);

}  // namespace homsurf
