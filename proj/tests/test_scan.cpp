#include "doctest.h"

#include "cpell/scan.hpp"

#include "cpell/specfun.hpp"

#include <cmath>

using namespace cpell;

TEST_CASE("far-right cell has winding zero by both methods") {
    ScanCell c = winding_number(2.0, 3.0, 0.0, 1.0, 2.25);
    CHECK(c.winding_phase == 0);
    CHECK(c.winding_logderiv == 0);
    CHECK(c.clean());
    CHECK(c.min_abs > 0.0);
    CHECK(c.samples >= 8);
}

TEST_CASE("preconditions") {
    CHECK_THROWS_AS(winding_number(0.2, 0.5, 0.0, 1.0, 2.25), std::domain_error);
    CHECK_THROWS_AS(winding_number(0.6, 0.5, 0.0, 1.0, 2.25), std::domain_error);
    CHECK_THROWS_AS(zero_scan(2, 0.51, 2.5, 0.0, 1.0, 0.1), std::domain_error);
    CHECK_THROWS_AS(zero_scan(2, 0.51, 1.0, 0.0, 1.0, -0.1), std::domain_error);
    CHECK_THROWS_AS(zero_scan(8, 0.51, 1.0, 0.0, 1.0, 0.1), std::domain_error);
}

TEST_CASE("winding adds over a 2x2 subdivision") {
    double rl = 0.6, rh = 0.8, il = 0.3, ih = 0.5, x = 2.25;
    ScanCell parent = winding_number(rl, rh, il, ih, x);
    int child_sum = 0;
    double rm = 0.7, im = 0.4;
    child_sum += winding_number(rl, rm, il, im, x).winding_phase;
    child_sum += winding_number(rm, rh, il, im, x).winding_phase;
    child_sum += winding_number(rl, rm, im, ih, x).winding_phase;
    child_sum += winding_number(rm, rh, im, ih, x).winding_phase;
    CHECK(parent.winding_phase == child_sum);
}

TEST_CASE("small strip scan is clean with zero windings") {
    ScanOptions opt;
    opt.threads = 2;
    auto cells = zero_scan(2, 0.51, 0.71, 0.0, 0.2, 0.05, opt);
    CHECK(cells.size() == 4 * 4);
    for (const auto& c : cells) {
        CHECK(c.clean());
        CHECK(c.winding_phase == 0);
        CHECK(c.winding_logderiv == 0);
        CHECK(c.min_abs > 0.0);
    }
}

TEST_CASE("conjugate cells of a symmetric scan agree") {
    auto cells = zero_scan(2, 0.6, 0.7, -0.1, 0.1, 0.05);
    REQUIRE(cells.size() == 2 * 4);
    // row-major: rows j = 0,1 (im in [-0.1,-0.05],[-0.05,0]...), 2 columns
    // conjugate pairing maps row j to row (ny-1-j)
    int nx = 2, ny = 4;
    for (int j = 0; j < ny; ++j) {
        for (int i = 0; i < nx; ++i) {
            const ScanCell& a = cells[static_cast<std::size_t>(j) * nx + i];
            const ScanCell& b = cells[static_cast<std::size_t>(ny - 1 - j) * nx + i];
            CHECK(a.winding_phase == b.winding_phase);
            CHECK(a.min_abs == doctest::Approx(b.min_abs).epsilon(1e-9));
        }
    }
}

TEST_CASE("evaluator respects conjugation for real second argument") {
    for (Complex s : {Complex(0.8, 7.0), Complex(0.55, 21.0), Complex(1.4, 2.0)}) {
        Complex up = picard_F(s, 2.25);
        Complex dn = picard_F(std::conj(s), 2.25);
        CHECK(std::abs(up - std::conj(dn)) <= 1e-12 * std::abs(up));
    }
}

TEST_CASE("csv serialization") {
    CHECK(scan_csv_header() ==
          "re_lo,re_hi,im_lo,im_hi,winding_phase,winding_logderiv,min_abs,samples,flag");
    ScanCell c;
    c.re_lo = 0.51;
    c.re_hi = 0.56;
    c.im_lo = -1.0;
    c.im_hi = -0.95;
    c.winding_phase = 0;
    c.winding_logderiv = 0;
    c.min_abs = 0.25;
    c.samples = 40;
    std::string row = scan_csv_row(c);
    CHECK(row.find("0.51") != std::string::npos);
    CHECK(row.find(",40,") != std::string::npos);
    // parses back into the same number of fields
    int commas = 0;
    for (char ch : row)
        if (ch == ',') ++commas;
    CHECK(commas == 8);
}
