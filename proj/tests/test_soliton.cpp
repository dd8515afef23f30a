#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "homsurf/killing.hpp"
#include "homsurf/models.hpp"
#include "homsurf/soliton.hpp"

using namespace homsurf;
using namespace testutil;

namespace {

const std::vector<Point2> kPts = standard_sample_points(12);

void check_family(const AffineSurface& s, const SolitonFamily& fam, double tol = 1e-10) {
  SolitonCheck chk = verify_soliton(s, fam, kPts, tol);
  CHECK(chk.ok);
  CHECK(chk.particular_residual < tol);
  CHECK(chk.kernel_residual < tol);
}

}  // namespace

TEST_CASE("constant-coefficient rank-1 solutions in closed form") {
  AffineSurface m1 = model({ModelFamily::M1});
  SolitonFamily f1 = solve_soliton(m1);
  REQUIRE(f1.exists);
  CHECK(f1.branch == "TypeA_rank1");
  REQUIRE(f1.kernel.size() == 2);
  for (const Point2& p : kPts) {
    CHECK(f1.particular.eval(p) == doctest::Approx(0.5 * p.x2).epsilon(1e-12));
    CHECK(f1.kernel[0].eval(p) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(f1.kernel[1].eval(p) == doctest::Approx(std::exp(2 * p.x2)).epsilon(1e-12));
  }
  check_family(m1, f1);

  // G_22^2 = 0 forces the quadratic particular solution
  AffineSurface s0 = AffineSurface::typeA(Coeff6{0, 0, 1, 0, 0, 0});  // rho = diag(0,-1)
  SolitonFamily f0 = solve_soliton(s0);
  REQUIRE(f0.exists);
  REQUIRE(f0.kernel.size() == 2);
  for (const Point2& p : kPts) {
    CHECK(f0.particular.eval(p) == doctest::Approx(0.5 * p.x2 * p.x2).epsilon(1e-12));
    CHECK(f0.kernel[1].eval(p) == doctest::Approx(p.x2).epsilon(1e-12));
  }
  check_family(s0, f0);

  AffineSurface m50 = model({ModelFamily::M5, 0.0});
  SolitonFamily f5 = solve_soliton(m50);
  REQUIRE(f5.exists);
  for (const Point2& p : kPts)
    CHECK(f5.particular.eval(p) == doctest::Approx(-0.5 * p.x2 * p.x2).epsilon(1e-12));
  check_family(m50, f5);

  check_family(model({ModelFamily::M4, 0.0}), solve_soliton(model({ModelFamily::M4, 0.0})));
  check_family(model({ModelFamily::M3, 0.25}), solve_soliton(model({ModelFamily::M3, 0.25})));
  check_family(model({ModelFamily::M5, 1.5}), solve_soliton(model({ModelFamily::M5, 1.5})));
}

TEST_CASE("existence dichotomy for constant coefficients") {
  std::mt19937_64 rng(19);
  int rank2_seen = 0;
  for (int it = 0; it < 50; ++it) {
    AffineSurface s = AffineSurface::typeA(random_coeffs(rng));
    int rank = ricci_rank(ricci_closed_form(s), 1e-9);
    SolitonFamily fam = solve_soliton(s);
    CHECK(fam.exists == (rank <= 1));
    if (rank == 2) {
      ++rank2_seen;
      CHECK(fam.branch == "none");
      REQUIRE(fam.kernel.size() == 1);  // constants always solve Hess h = 0
    }
  }
  CHECK(rank2_seen > 30);

  for (int it = 0; it < 50; ++it) {
    AffineSurface s = random_rank1_typeA(rng);
    SolitonFamily fam = solve_soliton(s);
    REQUIRE(fam.exists);
    check_family(s, fam, 1e-9);
  }
}

TEST_CASE("1/x^1 surfaces in the constant-coefficient intersection") {
  AffineSurface sb = AffineSurface::typeB(Coeff6{1, 0, 0, 0.5, 0, 0});
  SolitonFamily fb = solve_soliton(sb);
  REQUIRE(fb.exists);
  CHECK(fb.branch == "TypeB_intersectionA");
  REQUIRE(fb.kernel.size() == 2);
  for (const Point2& p : kPts) {
    CHECK(fb.particular.eval(p) == doctest::Approx(0.375 * std::log(p.x1)).epsilon(1e-12));
    CHECK(fb.kernel[1].eval(p) == doctest::Approx(p.x1 * p.x1).epsilon(1e-12));
  }
  check_family(sb, fb);

  // resonant exponent: the particular solution needs log^2
  AffineSurface sr = AffineSurface::typeB(Coeff6{-1, 0, 0, 1, 0, 0});
  SolitonFamily fr = solve_soliton(sr);
  REQUIRE(fr.exists);
  CHECK(fr.branch == "TypeB_intersectionA");
  REQUIRE(fr.kernel.size() == 2);
  for (const Point2& p : kPts) {
    double l = std::log(p.x1);
    CHECK(fr.particular.eval(p) == doctest::Approx(0.5 * l * l).epsilon(1e-12));
    CHECK(fr.kernel[1].eval(p) == doctest::Approx(l).epsilon(1e-12));
  }
  check_family(sr, fr);
}

TEST_CASE("alternating Ricci branch") {
  for (double c : {-0.7, 0.0, 1.1}) {
    AffineSurface q = model({ModelFamily::Q, c});
    SolitonFamily f = solve_soliton(q);
    REQUIRE(f.exists);
    CHECK(f.branch == "TypeB_alternating");
    CHECK(f.particular.is_zero());
    CHECK(f.kernel.size() == 1);
    check_family(q, f);
  }
  AffineSurface n2 = model({ModelFamily::N2, 0.5});
  SolitonFamily fn = solve_soliton(n2);
  REQUIRE(fn.exists);
  CHECK(fn.branch == "TypeB_alternating");
  check_family(n2, fn);

  AffineSurface p0 = model({ModelFamily::Pplus, 1.0, 0.0});  // a = 0, c = 1
  SolitonFamily fp = solve_soliton(p0);
  REQUIRE(fp.exists);
  CHECK(fp.branch == "TypeB_alternating");
  check_family(p0, fp);
}

TEST_CASE("two-parameter family: log potential and extended kernels") {
  AffineSurface plog = model({ModelFamily::Pplus, 0.0, 1.0});  // a = 1, c = 0
  SolitonFamily fl = solve_soliton(plog);
  REQUIRE(fl.exists);
  CHECK(fl.branch == "TypeB_Plog");
  CHECK(fl.kernel.size() == 1);
  for (const Point2& p : kPts)
    CHECK(fl.particular.eval(p) == doctest::Approx(std::log(p.x1)).epsilon(1e-12));
  check_family(plog, fl);

  for (ModelFamily fam : {ModelFamily::Pplus, ModelFamily::Pminus}) {
    AffineSurface p2b = model({fam, 0.0, -2.0});  // a = -2, c = 0
    SolitonFamily f2b = solve_soliton(p2b);
    REQUIRE(f2b.exists);
    CHECK(f2b.branch == "TypeB_P_extended_2b");
    REQUIRE(f2b.kernel.size() == 2);
    for (const Point2& p : kPts) {
      CHECK(f2b.particular.eval(p) == doctest::Approx(-2 * std::log(p.x1)).epsilon(1e-12));
      CHECK(f2b.kernel[1].eval(p) == doctest::Approx(p.x2).epsilon(1e-10));
    }
    check_family(p2b, f2b);
  }

  double c2 = std::sqrt(0.375);
  AffineSurface p2c = model({ModelFamily::Pminus, c2, -0.5});
  SolitonFamily f2c = solve_soliton(p2c);
  REQUIRE(f2c.exists);
  CHECK(f2c.branch == "TypeB_P_extended_2c");
  REQUIRE(f2c.kernel.size() == 2);
  for (const Point2& p : kPts) {
    CHECK(f2c.particular.eval(p) == doctest::Approx(-0.5 * std::log(p.x1)).epsilon(1e-12));
    CHECK(f2c.kernel[1].eval(p) == doctest::Approx(p.x2 - 2 * c2 * p.x1).epsilon(1e-10));
  }
  check_family(p2c, f2c);
}

TEST_CASE("solutions travel through chart changes") {
  std::mt19937_64 rng(25);
  std::uniform_real_distribution<double> ub(-1.0, 1.0);
  AffineSurface base = model({ModelFamily::Pplus, 0.6, 0.8});
  for (int it = 0; it < 5; ++it) {
    AffineSurface moved = linear_equiv_typeB(base, ub(rng), 0.4 + std::abs(ub(rng)));
    SolitonFamily fam = solve_soliton(moved);
    REQUIRE(fam.exists);
    CHECK(fam.branch == "TypeB_Plog");
    for (const Point2& p : kPts)
      CHECK(fam.particular.eval(p) == doctest::Approx(0.8 * std::log(p.x1)).epsilon(1e-9));
    check_family(moved, fam, 1e-9);
  }
}

TEST_CASE("no solution on the strictly 3-symmetric models") {
  for (ModelFamily fam : {ModelFamily::N1plus, ModelFamily::N1minus, ModelFamily::N3,
                          ModelFamily::N4}) {
    SolitonFamily f = solve_soliton(model({fam, 0.0}));
    CHECK(!f.exists);
    CHECK(f.branch == "none");
  }
  SolitonFamily f9 = solve_soliton(model({ModelFamily::N2, 0.9}));
  CHECK(!f9.exists);
}

TEST_CASE("flat branches") {
  SolitonFamily fa = solve_soliton(AffineSurface::typeA(Coeff6{}));
  REQUIRE(fa.exists);
  CHECK(fa.branch == "flat");
  CHECK(fa.kernel.size() == 3);
  check_family(AffineSurface::typeA(Coeff6{}), fa);

  // flat 1/x^1 chart: only constants are visible to the dictionary
  AffineSurface fb = AffineSurface::typeB(Coeff6{3, 0, 0, 0, 0, 0});
  SolitonFamily ff = solve_soliton(fb);
  REQUIRE(ff.exists);
  CHECK(ff.branch == "flat");
  CHECK(ff.kernel.size() == 1);
  check_family(fb, ff);
}

TEST_CASE("affine combinations with the kernel remain solutions") {
  AffineSurface m1 = model({ModelFamily::M1});
  SolitonFamily fam = solve_soliton(m1);
  REQUIRE(fam.kernel.size() == 2);
  SolitonFamily shifted = fam;
  shifted.particular = fam.particular + fam.kernel[1].scaled(0.3);
  check_family(m1, shifted);
}

TEST_CASE("yamabe kernel matches the homogeneous solution space") {
  CHECK(yamabe_kernel(AffineSurface::typeA(Coeff6{})).size() == 3);
  CHECK(yamabe_kernel(model({ModelFamily::M1})).size() == 2);
  CHECK(yamabe_kernel(AffineSurface::typeA(Coeff6{0.7, 0.2, -0.4, 1.1, 0.9, -0.3})).size() == 1);
  CHECK(yamabe_kernel(AffineSurface::typeB(Coeff6{1, 0, 0, 0.5, 0, 0})).size() == 2);
  CHECK(yamabe_kernel(model({ModelFamily::Q, 1.3})).size() == 1);
  CHECK(yamabe_kernel(model({ModelFamily::N3})).size() == 1);
}

TEST_CASE("branch labels without the full solve") {
  CHECK(soliton_branch_typeB(model({ModelFamily::Q, 0.4})) == "TypeB_alternating");
  CHECK(soliton_branch_typeB(model({ModelFamily::N3})) == "none");
  CHECK(soliton_branch_typeB(AffineSurface::typeB(Coeff6{1, 0, 0, 0.5, 0, 0})) ==
        "TypeB_intersectionA");
}
