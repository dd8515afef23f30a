#include "homsurf.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <random>
#include <string>

#include <json.hpp>

#include "homsurf/classify.hpp"
#include "homsurf/extension.hpp"
#include "homsurf/json_io.hpp"
#include "homsurf/killing.hpp"
#include "homsurf/soliton.hpp"
#include "homsurf/surface.hpp"
#include "homsurf/types.hpp"

struct hs_surface {
  homsurf::AffineSurface s;
};

namespace {

using homsurf::Json;

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

void set_err(char** err, const std::string& msg) {
  if (err) *err = dup_string(msg);
}

Json parse_json(const char* text) {
  if (!text || !*text) return Json::object();
  return Json::parse(text);  // throws nlohmann errors, mapped below
}

template <typename Fn>
hs_status wrap(char** out, char** err, Fn&& fn) {
  if (out) *out = nullptr;
  if (err) *err = nullptr;
  try {
    Json j = fn();
    if (out) *out = dup_string(j.dump());
    return HS_OK;
  } catch (const homsurf::Error& e) {
    set_err(err, e.what());
    return static_cast<hs_status>(static_cast<int>(e.code()));
  } catch (const nlohmann::json::exception& e) {
    set_err(err, e.what());
    return HS_ERR_PARSE;
  } catch (const std::exception& e) {
    set_err(err, e.what());
    return HS_ERR_UNKNOWN;
  }
}

homsurf::RunConfig cfg_from_text(const char* cfg_json) {
  return homsurf::config_from_json(parse_json(cfg_json));
}

std::vector<homsurf::Point2> sample_points(const homsurf::RunConfig& cfg) {
  return homsurf::standard_sample_points(cfg.samples, (unsigned)cfg.seed);
}

Json killing_section(const homsurf::AffineSurface& s, const homsurf::RunConfig& cfg) {
  std::vector<homsurf::VectorField> basis = homsurf::killing_basis(s, cfg.tol);
  std::vector<homsurf::Point2> pts = sample_points(cfg);
  double worst = 0;
  for (const homsurf::VectorField& X : basis)
    worst = std::max(worst, homsurf::killing_residual(s, X, pts));
  homsurf::StructureConstants sc = homsurf::structure_constants(basis, pts, cfg.tol);
  std::string label = homsurf::classify_lie_algebra(sc, cfg.tol);
  return homsurf::killing_to_json(basis, sc, label, worst);
}

Json soliton_section(const homsurf::AffineSurface& s, const homsurf::RunConfig& cfg) {
  homsurf::SolitonFamily fam = homsurf::solve_soliton(s, cfg.tol);
  homsurf::SolitonCheck chk = homsurf::verify_soliton(s, fam, sample_points(cfg), cfg.tol);
  return homsurf::soliton_to_json(fam, chk);
}

}  // namespace

extern "C" {

const char* hs_version(void) { return "1.0.0"; }

void hs_string_free(char* s) { std::free(s); }

hs_status hs_surface_from_json(const char* json_text, hs_surface** out, char** err) {
  if (!out) {
    set_err(err, "out pointer is required");
    return HS_ERR_PRECONDITION;
  }
  *out = nullptr;
  char* ignored = nullptr;
  hs_status rc = wrap(&ignored, err, [&]() -> Json {
    homsurf::AffineSurface s = homsurf::surface_from_json(parse_json(json_text));
    *out = new hs_surface{s};
    return Json::object();
  });
  hs_string_free(ignored);
  return rc;
}

void hs_surface_free(hs_surface* s) { delete s; }

hs_status hs_classify_json(const hs_surface* s, const char* cfg_json, char** out, char** err) {
  return wrap(out, err, [&]() -> Json {
    if (!s) homsurf::fail(homsurf::Status::PreconditionError, "surface handle is null");
    homsurf::RunConfig cfg = cfg_from_text(cfg_json);
    return homsurf::report_to_json(homsurf::classify(s->s, cfg.tol, /*flat_report=*/true));
  });
}

hs_status hs_killing_json(const hs_surface* s, const char* cfg_json, char** out, char** err) {
  return wrap(out, err, [&]() -> Json {
    if (!s) homsurf::fail(homsurf::Status::PreconditionError, "surface handle is null");
    return killing_section(s->s, cfg_from_text(cfg_json));
  });
}

hs_status hs_soliton_json(const hs_surface* s, const char* cfg_json, char** out, char** err) {
  return wrap(out, err, [&]() -> Json {
    if (!s) homsurf::fail(homsurf::Status::PreconditionError, "surface handle is null");
    return soliton_section(s->s, cfg_from_text(cfg_json));
  });
}

hs_status hs_yamabe_json(const hs_surface* s, const char* cfg_json, char** out, char** err) {
  return wrap(out, err, [&]() -> Json {
    if (!s) homsurf::fail(homsurf::Status::PreconditionError, "surface handle is null");
    homsurf::RunConfig cfg = cfg_from_text(cfg_json);
    return homsurf::yamabe_to_json(homsurf::yamabe_kernel(s->s, cfg.tol));
  });
}

hs_status hs_verify_extension_json(const hs_surface* s, const char* request_json, char** out,
                                   char** err) {
  return wrap(out, err, [&]() -> Json {
    if (!s) homsurf::fail(homsurf::Status::PreconditionError, "surface handle is null");
    Json req = parse_json(request_json);
    homsurf::RunConfig cfg;  // "tol" here gates the 4D residual, not the solver
    if (req.contains("seed")) cfg.seed = req.at("seed").get<std::uint64_t>();
    if (req.contains("samples")) cfg.samples = req.at("samples").get<int>();
    double h = req.value("h", 1e-4);
    double tol = req.value("tol", 1e-5);
    homsurf::Mat2 phi = homsurf::Mat2::Zero();
    if (req.contains("phi")) {
      const Json& pj = req.at("phi");
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) phi(i, j) = pj.at(i).at(j).get<double>();
    }
    std::vector<homsurf::Point4> pts;
    if (req.contains("points")) {
      for (const Json& pj : req.at("points"))
        pts.push_back({pj.at(0).get<double>(), pj.at(1).get<double>(), pj.at(2).get<double>(),
                       pj.at(3).get<double>()});
    } else {
      std::mt19937_64 rng(cfg.seed + 1);
      std::uniform_real_distribution<double> uy(-0.5, 0.5);
      for (const homsurf::Point2& p : sample_points(cfg))
        pts.push_back({p.x1, p.x2, uy(rng), uy(rng)});
    }
    homsurf::SolitonFamily fam = homsurf::solve_soliton(s->s, cfg.tol);
    if (!fam.exists)
      homsurf::fail(homsurf::Status::PreconditionError,
                    "surface admits no soliton potential to lift");
    homsurf::ExtensionCheck chk =
        homsurf::verify_extension_soliton(s->s, phi, fam.particular, pts, h, tol);
    Json j = homsurf::extension_to_json(chk, h, (int)pts.size());
    j["branch"] = fam.branch;
    return j;
  });
}

hs_status hs_geodesic_json(const hs_surface* s, const char* request_json, char** out, char** err) {
  return wrap(out, err, [&]() -> Json {
    if (!s) homsurf::fail(homsurf::Status::PreconditionError, "surface handle is null");
    Json req = parse_json(request_json);
    if (!req.contains("p0") || !req.contains("v0"))
      homsurf::fail(homsurf::Status::ParseError, "geodesic request needs \"p0\" and \"v0\"");
    homsurf::Point2 p0{req.at("p0").at(0).get<double>(), req.at("p0").at(1).get<double>()};
    homsurf::Vec2 v0(req.at("v0").at(0).get<double>(), req.at("v0").at(1).get<double>());
    double t_max = req.value("t_max", 1.0);
    double dt = req.value("dt", 1e-3);
    return homsurf::geodesic_to_json(homsurf::geodesic_integrate(s->s, p0, v0, t_max, dt));
  });
}

hs_status hs_report_json(const hs_surface* s, const char* cfg_json, char** out, char** err) {
  return wrap(out, err, [&]() -> Json {
    if (!s) homsurf::fail(homsurf::Status::PreconditionError, "surface handle is null");
    homsurf::RunConfig cfg = cfg_from_text(cfg_json);
    Json j;
    auto section = [&](const char* key, auto&& fn) {
      try {
        j[key] = fn();
      } catch (const homsurf::Error& e) {
        j[key] = Json{{"error", Json{{"code", static_cast<int>(e.code())}, {"message", e.what()}}}};
      }
    };
    section("classify",
            [&] { return homsurf::report_to_json(homsurf::classify(s->s, cfg.tol, true)); });
    section("killing", [&] { return killing_section(s->s, cfg); });
    section("soliton", [&] { return soliton_section(s->s, cfg); });
    section("yamabe", [&] { return homsurf::yamabe_to_json(homsurf::yamabe_kernel(s->s, cfg.tol)); });
    return j;
  });
}

}  // extern "C"
