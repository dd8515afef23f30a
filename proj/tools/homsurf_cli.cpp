#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "homsurf.h"

namespace {

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream f(path);
  if (!f) {
    std::fprintf(stderr, "error: cannot open %s\n", path.c_str());
    std::exit(3);
  }
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

int status_to_exit(hs_status rc) {
  switch (rc) {
    case HS_OK:
      return 0;
    case HS_ERR_UNCLASSIFIED:
      return 2;
    case HS_ERR_PARSE:
    case HS_ERR_PARAM:
      return 3;
    case HS_ERR_VERIFY:
      return 4;
    default:
      return 1;
  }
}

void emit(const std::string& payload, bool compact) {
  if (!compact) {
    auto j = nlohmann::json::parse(payload, nullptr, false);
    if (!j.is_discarded()) {
      std::printf("%s\n", j.dump(2).c_str());
      return;
    }
  }
  std::printf("%s\n", payload.c_str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"homogeneous affine surface toolkit"};
  app.require_subcommand(1);

  std::string input_path;
  double tol = 1e-9;
  double fd_step = 0;  // 0 keeps the per-dimension defaults
  std::uint64_t seed = 0;
  int samples = 20;
  bool json_compact = false;
  app.add_option("--input", input_path, "input JSON file (default: stdin)");
  app.add_option("--tol", tol, "shared classification tolerance");
  app.add_option("--fd-step", fd_step, "finite-difference step for both 2D and 4D oracles");
  app.add_option("--seed", seed, "sample-point RNG seed");
  app.add_option("--samples", samples, "number of sample points");
  app.add_flag("--json", json_compact, "compact JSON output (default: indented)");

  CLI::App* c_classify = app.add_subcommand("classify", "classification report");
  CLI::App* c_killing = app.add_subcommand("killing", "Killing basis and Lie algebra");
  CLI::App* c_soliton = app.add_subcommand("soliton", "gradient soliton family");
  CLI::App* c_yamabe = app.add_subcommand("yamabe", "Hessian-parallel kernel");
  CLI::App* c_ext = app.add_subcommand("verify-extension", "4D extension soliton check");
  CLI::App* c_geo = app.add_subcommand("geodesic", "base geodesic integration");
  CLI::App* c_report = app.add_subcommand("report", "all analyses bundled");
  for (CLI::App* sub : {c_classify, c_killing, c_soliton, c_yamabe, c_ext, c_geo, c_report})
    sub->fallthrough();  // lets the shared --input/--tol/... options follow the subcommand

  CLI11_PARSE(app, argc, argv);

  nlohmann::json in = nlohmann::json::parse(read_input(input_path), nullptr, false);
  if (in.is_discarded()) {
    std::fprintf(stderr, "error: input is not valid JSON\n");
    return 3;
  }
  nlohmann::json surface_spec = in.is_object() && in.contains("surface") ? in.at("surface") : in;
  nlohmann::json request = nlohmann::json::object();
  if (in.is_object() && in.contains("surface")) {
    request = in;
    request.erase("surface");
  }

  nlohmann::json cfg = {{"tol", tol}, {"seed", seed}, {"samples", samples}};
  if (fd_step > 0) {
    cfg["fd_step_2d"] = fd_step;
    cfg["fd_step_4d"] = fd_step;
  }

  hs_surface* s = nullptr;
  char* out = nullptr;
  char* err = nullptr;
  hs_status rc = hs_surface_from_json(surface_spec.dump().c_str(), &s, &err);
  if (rc == HS_OK) {
    std::string cfg_text = cfg.dump();
    if (c_classify->parsed()) {
      rc = hs_classify_json(s, cfg_text.c_str(), &out, &err);
    } else if (c_killing->parsed()) {
      rc = hs_killing_json(s, cfg_text.c_str(), &out, &err);
    } else if (c_soliton->parsed()) {
      rc = hs_soliton_json(s, cfg_text.c_str(), &out, &err);
    } else if (c_yamabe->parsed()) {
      rc = hs_yamabe_json(s, cfg_text.c_str(), &out, &err);
    } else if (c_ext->parsed()) {
      if (!request.contains("seed")) request["seed"] = seed;
      if (!request.contains("samples")) request["samples"] = samples;
      rc = hs_verify_extension_json(s, request.dump().c_str(), &out, &err);
    } else if (c_geo->parsed()) {
      rc = hs_geodesic_json(s, request.dump().c_str(), &out, &err);
    } else if (c_report->parsed()) {
      rc = hs_report_json(s, cfg_text.c_str(), &out, &err);
    }
  }

  int code = status_to_exit(rc);
  if (rc == HS_OK && out)
    emit(out, json_compact);
  else if (err)
    std::fprintf(stderr, "error: %s\n", err);
  hs_string_free(out);
  hs_string_free(err);
  hs_surface_free(s);
  return code;
}
