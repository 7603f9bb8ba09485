#include "cpell/scan.hpp"

#include "cpell/lfunctions.hpp"
#include "cpell/specfun.hpp"

#include <atomic>
#include <cmath>
#include <sstream>
#include <thread>

namespace cpell {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kReFloor = 1.0 / 3.0 + 0.01;

struct GuardHit {};  // boundary came too close to a zero; forces subdivision

struct EdgeData {
    double darg = 0;           // total phase change along the directed edge
    Complex logderiv{0, 0};    // int F'/F ds along the directed edge
    double min_abs = 0;
    long long samples = 0;
};

// phase change along the segment a->b by adaptive sampling; |f| dips below
// the guard raise GuardHit
class EdgeTracker {
public:
    EdgeTracker(Complex a, Complex b, double x, const ScanOptions& opt)
        : a_(a), b_(b), x_(x), opt_(opt) {}

    EdgeData run() {
        EdgeData d;
        Complex fa = eval(0.0), fb = eval(1.0);
        min_abs_ = std::min(std::abs(fa), std::abs(fb));
        samples_ = 2;
        d.darg = march(0.0, fa, 1.0, fb, opt_.max_refine_depth);
        d.min_abs = min_abs_;
        d.samples = samples_;

        QuadratureConfig qc = opt_.quadrature;
        qc.abs_tol = 1e-6;
        qc.rel_tol = 1e-8;
        qc.max_subdivisions = 200;
        Complex seg = b_ - a_;
        d.logderiv = integrate(
                         [&](double t) {
                             auto [f, fp] = picard_F_with_deriv(a_ + t * seg, x_, opt_.quadrature);
                             if (std::abs(f) < opt_.boundary_guard) throw GuardHit{};
                             return fp / f;
                         },
                         0.0, 1.0, qc) *
                     seg;
        return d;
    }

private:
    Complex eval(double t) {
        Complex f = picard_F(a_ + t * (b_ - a_), x_, opt_.quadrature);
        if (std::abs(f) < opt_.boundary_guard) throw GuardHit{};
        return f;
    }

    double march(double t0, Complex f0, double t1, Complex f1, int depth) {
        double d = std::arg(f1 / f0);
        if (std::abs(d) < kPi / 2) return d;
        if (depth <= 0) throw GuardHit{};
        double tm = 0.5 * (t0 + t1);
        Complex fm = eval(tm);
        min_abs_ = std::min(min_abs_, std::abs(fm));
        ++samples_;
        return march(t0, f0, tm, fm, depth - 1) + march(tm, fm, t1, f1, depth - 1);
    }

    Complex a_, b_;
    double x_;
    const ScanOptions& opt_;
    double min_abs_ = 0;
    long long samples_ = 0;
};

EdgeData edge_data(Complex a, Complex b, double x, const ScanOptions& opt) {
    return EdgeTracker(a, b, x, opt).run();
}

ScanCell assemble(double re_lo, double re_hi, double im_lo, double im_hi,
                  const EdgeData& bottom, const EdgeData& right, const EdgeData& top,
                  const EdgeData& left) {
    // counterclockwise: bottom + right - top - left (top/left stored in the
    // +re/+im directions)
    ScanCell c;
    c.re_lo = re_lo;
    c.re_hi = re_hi;
    c.im_lo = im_lo;
    c.im_hi = im_hi;
    double total = bottom.darg + right.darg - top.darg - left.darg;
    Complex ld = bottom.logderiv + right.logderiv - top.logderiv - left.logderiv;
    double wp = total / (2 * kPi);
    double wl = ld.imag() / (2 * kPi);
    c.winding_phase = static_cast<int>(std::lround(wp));
    c.winding_logderiv = static_cast<int>(std::lround(wl));
    c.min_abs = std::min(std::min(bottom.min_abs, right.min_abs), std::min(top.min_abs, left.min_abs));
    c.samples = bottom.samples + right.samples + top.samples + left.samples;
    if (std::abs(wp - c.winding_phase) > 0.2 || std::abs(wl - c.winding_logderiv) > 0.2)
        c.flag = "nonintegral";
    return c;
}

ScanCell cell_once(double re_lo, double re_hi, double im_lo, double im_hi, double x,
                   const ScanOptions& opt) {
    Complex c00{re_lo, im_lo}, c10{re_hi, im_lo}, c01{re_lo, im_hi}, c11{re_hi, im_hi};
    EdgeData bottom = edge_data(c00, c10, x, opt);
    EdgeData right = edge_data(c10, c11, x, opt);
    EdgeData top = edge_data(c01, c11, x, opt);
    EdgeData left = edge_data(c00, c01, x, opt);
    return assemble(re_lo, re_hi, im_lo, im_hi, bottom, right, top, left);
}

ScanCell cell_recursive(double re_lo, double re_hi, double im_lo, double im_hi, double x,
                        const ScanOptions& opt, int depth) {
    try {
        ScanCell c = cell_once(re_lo, re_hi, im_lo, im_hi, x, opt);
        if (c.flag.empty() && c.winding_phase == c.winding_logderiv) return c;
        if (depth <= 0) {
            c.flag = c.flag.empty() ? "disagree" : c.flag;
            return c;
        }
    } catch (const GuardHit&) {
        if (depth <= 0) {
            ScanCell c;
            c.re_lo = re_lo;
            c.re_hi = re_hi;
            c.im_lo = im_lo;
            c.im_hi = im_hi;
            c.flag = "guard";
            return c;
        }
    }
    // subdivide into 4; winding adds over children
    double rm = 0.5 * (re_lo + re_hi), im = 0.5 * (im_lo + im_hi);
    ScanCell q[4] = {cell_recursive(re_lo, rm, im_lo, im, x, opt, depth - 1),
                     cell_recursive(rm, re_hi, im_lo, im, x, opt, depth - 1),
                     cell_recursive(re_lo, rm, im, im_hi, x, opt, depth - 1),
                     cell_recursive(rm, re_hi, im, im_hi, x, opt, depth - 1)};
    ScanCell c;
    c.re_lo = re_lo;
    c.re_hi = re_hi;
    c.im_lo = im_lo;
    c.im_hi = im_hi;
    c.min_abs = q[0].min_abs;
    c.flag = "subdivided";
    for (auto& ch : q) {
        c.winding_phase += ch.winding_phase;
        c.winding_logderiv += ch.winding_logderiv;
        c.min_abs = std::min(c.min_abs, ch.min_abs);
        c.samples += ch.samples;
        if (!ch.flag.empty() && ch.flag != "subdivided") c.flag = "guard";
    }
    if (c.flag == "subdivided" && c.winding_phase == c.winding_logderiv) c.flag = "";
    return c;
}

} // namespace

ScanCell winding_number(double re_lo, double re_hi, double im_lo, double im_hi, double x,
                        const ScanOptions& opt) {
    if (!(re_lo < re_hi) || !(im_lo < im_hi)) throw std::domain_error("empty scan cell");
    if (re_lo < kReFloor)
        throw std::domain_error("scan cell must stay right of Re(s) = 1/3 + 0.01");
    if (!(x > 0.0)) throw std::domain_error("winding_number requires x > 0");
    return cell_recursive(re_lo, re_hi, im_lo, im_hi, x, opt, opt.max_subdivide_depth);
}

std::vector<ScanCell> zero_scan(int d, double re_lo, double re_hi, double im_lo, double im_hi,
                                double grid, const ScanOptions& opt) {
    require_cubefree_d(d);
    if (!(grid > 0.0)) throw std::domain_error("grid must be positive");
    if (re_lo < kReFloor || re_hi > 2.0 + 1e-12)
        throw std::domain_error("re range must lie in (1/3 + 0.01, 2]");
    if (!(re_lo < re_hi) || !(im_lo < im_hi)) throw std::domain_error("empty scan region");
    double x = (static_cast<double>(d) + 1.0) * (d + 1.0) / (2.0 * d);

    int nx = std::max(1, static_cast<int>(std::lround((re_hi - re_lo) / grid)));
    int ny = std::max(1, static_cast<int>(std::lround((im_hi - im_lo) / grid)));
    auto re_at = [&](int i) { return re_lo + (re_hi - re_lo) * i / nx; };
    auto im_at = [&](int j) { return im_lo + (im_hi - im_lo) * j / ny; };

    // shared edges: horizontal H(i,j): (i,j)->(i+1,j); vertical V(i,j): (i,j)->(i,j+1)
    std::vector<EdgeData> H(static_cast<std::size_t>(nx) * (ny + 1));
    std::vector<EdgeData> V(static_cast<std::size_t>(nx + 1) * ny);
    std::vector<char> Hguard(H.size(), 0), Vguard(V.size(), 0);
    auto hidx = [&](int i, int j) { return static_cast<std::size_t>(j) * nx + i; };
    auto vidx = [&](int i, int j) { return static_cast<std::size_t>(j) * (nx + 1) + i; };

    std::int64_t n_edges = static_cast<std::int64_t>(H.size() + V.size());
    std::atomic<std::int64_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::int64_t k = next.fetch_add(1);
            if (k >= n_edges) return;
            try {
                if (k < static_cast<std::int64_t>(H.size())) {
                    int i = static_cast<int>(k % nx), j = static_cast<int>(k / nx);
                    H[static_cast<std::size_t>(k)] =
                        edge_data({re_at(i), im_at(j)}, {re_at(i + 1), im_at(j)}, x, opt);
                } else {
                    std::int64_t k2 = k - H.size();
                    int i = static_cast<int>(k2 % (nx + 1)), j = static_cast<int>(k2 / (nx + 1));
                    V[static_cast<std::size_t>(k2)] =
                        edge_data({re_at(i), im_at(j)}, {re_at(i), im_at(j + 1)}, x, opt);
                }
            } catch (const GuardHit&) {
                if (k < static_cast<std::int64_t>(H.size()))
                    Hguard[static_cast<std::size_t>(k)] = 1;
                else
                    Vguard[static_cast<std::size_t>(k - H.size())] = 1;
            }
        }
    };
    int threads = std::max(1, opt.threads);
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    std::vector<ScanCell> out;
    out.reserve(static_cast<std::size_t>(nx) * ny);
    for (int j = 0; j < ny; ++j) {
        for (int i = 0; i < nx; ++i) {
            bool guard = Hguard[hidx(i, j)] || Hguard[hidx(i, j + 1)] || Vguard[vidx(i, j)] ||
                         Vguard[vidx(i + 1, j)];
            ScanCell c;
            if (!guard) {
                c = assemble(re_at(i), re_at(i + 1), im_at(j), im_at(j + 1), H[hidx(i, j)],
                             V[vidx(i + 1, j)], H[hidx(i, j + 1)], V[vidx(i, j)]);
            }
            if (guard || !c.flag.empty() || c.winding_phase != c.winding_logderiv) {
                // isolate the troublesome cell and let it subdivide
                c = winding_number(re_at(i), re_at(i + 1), im_at(j), im_at(j + 1), x, opt);
            }
            out.push_back(c);
        }
    }
    return out;
}

std::string scan_csv_header() {
    return "re_lo,re_hi,im_lo,im_hi,winding_phase,winding_logderiv,min_abs,samples,flag";
}

std::string scan_csv_row(const ScanCell& c) {
    std::ostringstream os;
    os.precision(17);
    os << c.re_lo << ',' << c.re_hi << ',' << c.im_lo << ',' << c.im_hi << ','
       << c.winding_phase << ',' << c.winding_logderiv << ',' << c.min_abs << ',' << c.samples
       << ',' << c.flag;
    return os.str();
}

} // namespace cpell
