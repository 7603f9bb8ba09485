// scan.hpp - numerical zero detection for s -> F(s, x) on rectangles in
// the strip Re(s) > 1/3 via the argument principle, with two independent
// winding computations per cell (boundary phase tracking and the contour
// integral of F'/F).
#pragma once

#include "cpell/quadrature.hpp"

#include <string>
#include <vector>

namespace cpell {

struct ScanCell {
    double re_lo = 0, re_hi = 0, im_lo = 0, im_hi = 0;
    int winding_phase = 0;
    int winding_logderiv = 0;
    double min_abs = 0;
    long long samples = 0;
    std::string flag;  // empty = clean; "subdivided" / "guard" on trouble

    bool clean() const { return flag.empty() && winding_phase == winding_logderiv; }
};

struct ScanOptions {
    QuadratureConfig quadrature;
    double boundary_guard = 1e-9;  // refuse contours passing this close to 0
    int max_refine_depth = 24;
    int max_subdivide_depth = 4;
    int threads = 1;
};

// Winding number of F(., x) around the rectangle boundary.  The cell must
// stay right of Re(s) = 1/3 + 0.01.  Phase tracking keeps successive jumps
// below pi/2; the log-derivative contour integral must agree with the
// tracked winding, else the cell is subdivided (winding adds over children).
ScanCell winding_number(double re_lo, double re_hi, double im_lo, double im_hi, double x,
                        const ScanOptions& opt = {});

// Tile [re_lo, re_hi] x [im_lo, im_hi] with square cells of side `grid`,
// computing both windings and min |F| per cell.  Interior edges are
// evaluated once and shared by their two cells; results are emitted in
// row-major grid order regardless of the thread count.
std::vector<ScanCell> zero_scan(int d, double re_lo, double re_hi, double im_lo, double im_hi,
                                double grid, const ScanOptions& opt = {});

// CSV serialization (schema:
// re_lo,re_hi,im_lo,im_hi,winding_phase,winding_logderiv,min_abs,samples,flag)
std::string scan_csv_header();
std::string scan_csv_row(const ScanCell& c);

} // namespace cpell
