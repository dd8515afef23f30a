#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "homsurf/classify.hpp"
#include "homsurf/extension.hpp"
#include "homsurf/killing.hpp"
#include "homsurf/soliton.hpp"
#include "homsurf/surface.hpp"
#include "homsurf/types.hpp"

namespace homsurf {

using Json = nlohmann::json;

// Round-trip through "%.<digits>g" so every emitted number is reproducible.
double round_sig(double x, int digits = 12);

// Accepts {"kind":"typeA"|"typeB","gamma":{"111":..,...,"222":..}} or model
// shorthand {"model":"M2","params":{"c":0.25}} (P takes "a","c","sign").
AffineSurface surface_from_json(const Json& j);

// Optional keys tol, fd_step_2d, fd_step_4d, seed, samples override base.
RunConfig config_from_json(const Json& j, const RunConfig& base = {});

Json term_to_json(const Term& t);
Json scalar_field_to_json(const ScalarField& f);
Json vector_field_to_json(const VectorField& X);
Json mat2_to_json(const Mat2& m);
Json mat4_to_json(const Mat4& m);
Json cov2_to_json(const Cov2Field& c);

Json report_to_json(const ClassificationReport& rep);
Json soliton_to_json(const SolitonFamily& fam, const SolitonCheck& chk);
Json yamabe_to_json(const std::vector<ScalarField>& kernel);
Json killing_to_json(const std::vector<VectorField>& basis, const StructureConstants& sc,
                     const std::string& algebra, double max_residual);
Json geodesic_to_json(const GeodesicPath& path);
Json extension_to_json(const ExtensionCheck& chk, double h, int npts);

}  // namespace homsurf
