#include "homsurf/json_io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "homsurf/models.hpp"

namespace homsurf {

double round_sig(double x, int digits) {
  if (!std::isfinite(x)) return x;
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return std::strtod(buf, nullptr);
}

namespace {

double num_at(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number())
    fail(Status::ParseError, std::string("expected a number at \"") + key + "\"");
  return j.at(key).get<double>();
}

AffineSurface surface_from_model(const Json& j) {
  std::string name = j.at("model").get<std::string>();
  for (char& ch : name) ch = (char)std::toupper((unsigned char)ch);
  Json params = j.value("params", Json::object());
  ModelId id;
  if (params.contains("c")) id.c = num_at(params, "c");
  if (params.contains("a")) id.a = num_at(params, "a");

  if (name == "M1")
    id.family = ModelFamily::M1;
  else if (name == "M2")
    id.family = ModelFamily::M2;
  else if (name == "M3")
    id.family = ModelFamily::M3;
  else if (name == "M4")
    id.family = ModelFamily::M4;
  else if (name == "M5")
    id.family = ModelFamily::M5;
  else if (name == "N1+" || name == "N1PLUS")
    id.family = ModelFamily::N1plus;
  else if (name == "N1-" || name == "N1MINUS")
    id.family = ModelFamily::N1minus;
  else if (name == "N2")
    id.family = ModelFamily::N2;
  else if (name == "N3")
    id.family = ModelFamily::N3;
  else if (name == "N4")
    id.family = ModelFamily::N4;
  else if (name == "P" || name == "P+" || name == "P-") {
    std::string sign = name == "P" ? params.value("sign", "+") : name.substr(1);
    if (sign != "+" && sign != "-") fail(Status::ParseError, "P sign must be \"+\" or \"-\"");
    id.family = sign == "+" ? ModelFamily::Pplus : ModelFamily::Pminus;
  } else if (name == "Q")
    id.family = ModelFamily::Q;
  else
    fail(Status::ParseError, "unknown model name \"" + name + "\"");
  return model(id);
}

}  // namespace

AffineSurface surface_from_json(const Json& j) {
  if (!j.is_object()) fail(Status::ParseError, "surface spec must be a JSON object");
  if (j.contains("model")) return surface_from_model(j);
  if (!j.contains("kind") || !j.contains("gamma"))
    fail(Status::ParseError, "surface spec needs \"model\" or \"kind\" plus \"gamma\"");
  const Json& g = j.at("gamma");
  if (!g.is_object()) fail(Status::ParseError, "\"gamma\" must map index strings to numbers");
  Coeff6 c;
  static const char* keys[6] = {"111", "112", "121", "122", "221", "222"};
  double* slots[6] = {&c.g111, &c.g112, &c.g121, &c.g122, &c.g221, &c.g222};
  for (int i = 0; i < 6; ++i) *slots[i] = num_at(g, keys[i]);
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "typeA" || kind == "TypeA" || kind == "A") return AffineSurface::typeA(c);
  if (kind == "typeB" || kind == "TypeB" || kind == "B") return AffineSurface::typeB(c);
  fail(Status::ParseError, "\"kind\" must be \"typeA\" or \"typeB\"");
}

RunConfig config_from_json(const Json& j, const RunConfig& base) {
  RunConfig cfg = base;
  if (j.is_null()) return cfg;
  if (!j.is_object()) fail(Status::ParseError, "config must be a JSON object");
  if (j.contains("tol")) cfg.tol = num_at(j, "tol");
  if (j.contains("fd_step_2d")) cfg.fd_step_2d = num_at(j, "fd_step_2d");
  if (j.contains("fd_step_4d")) cfg.fd_step_4d = num_at(j, "fd_step_4d");
  if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("samples")) cfg.samples = j.at("samples").get<int>();
  if (!(cfg.tol > 0) || !(cfg.fd_step_2d > 0) || !(cfg.fd_step_4d > 0) || cfg.samples < 1)
    fail(Status::ParamError, "config values out of range");
  return cfg;
}

Json term_to_json(const Term& t) {
  Json j;
  j["coeff"] = round_sig(t.coeff);
  j["p1"] = round_sig(t.p1);
  j["p2"] = t.p2;
  j["ea"] = round_sig(t.ea);
  j["eb"] = round_sig(t.eb);
  j["log"] = t.lp;
  const char* kind = t.trig == TrigKind::Cos ? "cos" : t.trig == TrigKind::Sin ? "sin" : "none";
  j["trig"] = Json{{"kind", kind}, {"omega", round_sig(t.omega)}};
  return j;
}

Json scalar_field_to_json(const ScalarField& f) {
  Json arr = Json::array();
  for (const Term& t : f.terms) arr.push_back(term_to_json(t));
  return arr;
}

Json vector_field_to_json(const VectorField& X) {
  return Json{{"c1", scalar_field_to_json(X.c1)}, {"c2", scalar_field_to_json(X.c2)}};
}

Json mat2_to_json(const Mat2& m) {
  return Json::array({Json::array({round_sig(m(0, 0)), round_sig(m(0, 1))}),
                      Json::array({round_sig(m(1, 0)), round_sig(m(1, 1))})});
}

Json mat4_to_json(const Mat4& m) {
  Json rows = Json::array();
  for (int i = 0; i < 4; ++i) {
    Json row = Json::array();
    for (int j = 0; j < 4; ++j) row.push_back(round_sig(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Json cov2_to_json(const Cov2Field& c) {
  return Json{{"scale_power", c.scale_power}, {"m", mat2_to_json(c.M)}};
}

Json report_to_json(const ClassificationReport& rep) {
  Json j;
  j["kind"] = rep.kind == SurfaceKind::TypeA ? "typeA" : "typeB";
  j["flat"] = rep.flat;
  j["ricci"] = cov2_to_json(rep.ricci);
  j["rank"] = rep.rank;
  if (rep.alpha.defined) {
    j["alpha"] = round_sig(rep.alpha.alpha);
    j["epsilon"] = rep.alpha.epsilon;
  }
  j["killing_dim"] = rep.killing_dim;
  j["algebra"] = rep.algebra;
  j["typeA"] = rep.is_typeA;
  j["typeB"] = rep.is_typeB;
  j["typeC"] = rep.is_typeC;
  j["soliton_class"] = rep.soliton_class;
  if (!rep.model_name.empty()) {
    j["model"] = rep.model_name;
    j["model_params"] =
        Json{{"a", round_sig(rep.model_param_a)}, {"c", round_sig(rep.model_param_c)}};
  }
  j["normalizing_transform"] = mat2_to_json(rep.to_normalized);
  if (!rep.note.empty()) j["note"] = rep.note;
  if (rep.has_typeb_invariants) {
    j["rho0"] = Json{{"scale_power", rep.typeb.rho0.scale_power},
                     {"w", Json::array({round_sig(rep.typeb.rho0.w1), round_sig(rep.typeb.rho0.w2)})}};
    j["rho1"] = cov2_to_json(rep.typeb.rho1);
    j["rho2"] = cov2_to_json(rep.typeb.rho2);
    j["rho3"] = cov2_to_json(rep.typeb.rho3);
  }
  return j;
}

Json soliton_to_json(const SolitonFamily& fam, const SolitonCheck& chk) {
  Json kernel = Json::array();
  for (const ScalarField& h : fam.kernel) kernel.push_back(scalar_field_to_json(h));
  return Json{{"exists", fam.exists},
              {"branch", fam.branch},
              {"particular", scalar_field_to_json(fam.particular)},
              {"kernel", kernel},
              {"particular_residual", round_sig(chk.particular_residual)},
              {"kernel_residual", round_sig(chk.kernel_residual)},
              {"verified", chk.ok}};
}

Json yamabe_to_json(const std::vector<ScalarField>& kernel) {
  Json arr = Json::array();
  for (const ScalarField& h : kernel) arr.push_back(scalar_field_to_json(h));
  return Json{{"dim", (int)kernel.size()}, {"kernel", arr}};
}

Json killing_to_json(const std::vector<VectorField>& basis, const StructureConstants& sc,
                     const std::string& algebra, double max_residual) {
  Json fields = Json::array();
  for (const VectorField& X : basis) fields.push_back(vector_field_to_json(X));
  Json cs = Json::array();
  for (int k = 0; k < sc.dim; ++k) {
    Json mk = Json::array();
    for (int i = 0; i < sc.dim; ++i) {
      Json row = Json::array();
      for (int j = 0; j < sc.dim; ++j) row.push_back(round_sig(sc.at(k, i, j)));
      mk.push_back(row);
    }
    cs.push_back(mk);
  }
  return Json{{"dim", sc.dim},
              {"fields", fields},
              {"structure_constants", cs},
              {"algebra", algebra},
              {"max_residual", round_sig(max_residual)},
              {"fit_residual", round_sig(sc.fit_residual)}};
}

Json geodesic_to_json(const GeodesicPath& path) {
  Json samples = Json::array();
  for (const GeodesicSample& s : path.samples)
    samples.push_back(Json{{"t", round_sig(s.t)},
                           {"x", Json::array({round_sig(s.x.x1), round_sig(s.x.x2)})},
                           {"v", Json::array({round_sig(s.v(0)), round_sig(s.v(1))})}});
  return Json{{"blew_up", path.blew_up},
              {"t_max_reached", round_sig(path.t_max_reached)},
              {"stop_reason", path.stop_reason},
              {"samples", samples}};
}

Json extension_to_json(const ExtensionCheck& chk, double h, int npts) {
  return Json{{"max_residual", round_sig(chk.max_residual)},
              {"ok", chk.ok},
              {"h", round_sig(h)},
              {"points", npts}};
}

}  // namespace homsurf
