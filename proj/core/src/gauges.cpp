#include "lmt/gauges.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <queue>
#include <stdexcept>

#include "lmt/errors.hpp"
#include "lmt/linalg.hpp"
#include "lmt/transforms.hpp"

namespace lmt {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Support value of W(t) in the planar direction phi:
// S(phi) = max_{w in W(t)} <w, (cos phi, sin phi)> = lambda_max(Re(e^{-i phi} t)).
double direction_support(const ComplexMatrix& t, double phi) {
    return hermitian_lambda_max(rotated_hermitian_part(t, -phi));
}

// Upper bound on |w| over w in W with direction inside the arc
// [phi1, phi1 + delta], from the two support constraints.  Requires
// delta < pi/2.  s1, s2 are the support values at the arc ends.
double arc_modulus_bound(double s1, double s2, double delta) {
    if (s1 <= 0.0 || s2 <= 0.0) return 0.0;
    const double sd = std::sin(delta);
    const double cd = std::cos(delta);
    const double tanPsi = (s2 - s1 * cd) / (s1 * sd);
    const double psi = std::atan(tanPsi);
    if (psi >= 0.0 && psi <= delta) return s1 / std::cos(psi);
    if (psi < 0.0) return std::min(s1, s2 / cd);
    return std::min(s2, s1 / cd);
}

struct Arc {
    double phi1, phi2;
    double s1, s2;
    double ub;
};

struct ArcLess {
    bool operator()(const Arc& a, const Arc& b) const { return a.ub < b.ub; }
};

// Lipschitz branch-and-bound state for cross_term_sup.
struct Cell {
    double a, b;
    double fa, fb;
    double ub;
};

struct CellLess {
    bool operator()(const Cell& x, const Cell& y) const { return x.ub < y.ub; }
};

}  // namespace

std::string method_name(GaugeBracket::Method m) {
    switch (m) {
        case GaugeBracket::Method::GridRefine: return "grid-refine";
        case GaugeBracket::Method::Quadrature: return "quadrature";
        case GaugeBracket::Method::ClosedForm: return "closed-form";
    }
    return "unknown";
}

double support_function(const ComplexMatrix& t, double theta) {
    return hermitian_lambda_max(rotated_hermitian_part(t, theta));
}

GaugeBracket numerical_radius(const ComplexMatrix& t, double tol, long budget) {
    if (tol <= 0.0) throw std::invalid_argument("numerical_radius: tol <= 0");
    GaugeBracket out;
    out.method = GaugeBracket::Method::GridRefine;
    const std::size_t n = t.dim();
    if (n == 0 || t.max_abs() == 0.0) return out;

    constexpr int kInitial = 16;  // keeps every arc narrower than pi/2
    std::vector<double> phi(kInitial + 1), sup(kInitial + 1);
    double lo = -std::numeric_limits<double>::infinity();
    for (int j = 0; j <= kInitial; ++j) {
        phi[j] = 2.0 * kPi * j / kInitial;
        sup[j] = (j == kInitial) ? sup[0] : direction_support(t, phi[j]);
        lo = std::max(lo, sup[j]);
    }
    out.evaluations = kInitial;

    std::priority_queue<Arc, std::vector<Arc>, ArcLess> heap;
    for (int j = 0; j < kInitial; ++j) {
        Arc arc{phi[j], phi[j + 1], sup[j], sup[j + 1], 0.0};
        arc.ub = arc_modulus_bound(arc.s1, arc.s2, arc.phi2 - arc.phi1);
        heap.push(arc);
    }

    while (!heap.empty()) {
        const Arc top = heap.top();
        const double hi = std::max(lo, top.ub);
        if (hi - lo <= tol) {
            out.lo = lo;
            out.hi = hi;
            return out;
        }
        if (out.evaluations >= budget)
            throw BudgetExceeded("numerical_radius: evaluation budget reached", lo, hi,
                                 out.evaluations);
        heap.pop();
        const double mid = 0.5 * (top.phi1 + top.phi2);
        const double sm = direction_support(t, mid);
        ++out.evaluations;
        lo = std::max(lo, sm);
        Arc leftArc{top.phi1, mid, top.s1, sm, 0.0};
        leftArc.ub = arc_modulus_bound(leftArc.s1, leftArc.s2, mid - top.phi1);
        Arc rightArc{mid, top.phi2, sm, top.s2, 0.0};
        rightArc.ub = arc_modulus_bound(rightArc.s1, rightArc.s2, top.phi2 - mid);
        heap.push(leftArc);
        heap.push(rightArc);
    }
    out.lo = out.hi = std::max(lo, 0.0);
    return out;
}

std::vector<RangePoint> range_boundary(const ComplexMatrix& t, int m) {
    if (m < 3) throw std::invalid_argument("range_boundary: need at least 3 points");
    std::vector<RangePoint> pts;
    pts.reserve(m);
    for (int j = 0; j < m; ++j) {
        const double theta = 2.0 * kPi * j / m;
        const auto [lam, x] = hermitian_top_eigenpair(rotated_hermitian_part(t, theta));
        RangePoint pt;
        pt.theta = theta;
        pt.support = lam;
        pt.value = inner(t.apply(x), x);
        pts.push_back(pt);
    }
    return pts;
}

bool range_inclusion(const ComplexMatrix& a, const ComplexMatrix& b, int grid, double tol) {
    if (a.dim() != b.dim()) throw std::invalid_argument("range_inclusion: dimension mismatch");
    if (grid < 3) throw std::invalid_argument("range_inclusion: grid too small");
    for (int j = 0; j < grid; ++j) {
        const double theta = 2.0 * kPi * j / grid;
        if (support_function(a, theta) > support_function(b, theta) + tol) return false;
    }
    return true;
}

GaugeBracket convex_integral(const std::function<GaugeBracket(double)>& f, double a,
                             double b, double tol, int maxNodes) {
    if (tol <= 0.0) throw std::invalid_argument("convex_integral: tol <= 0");
    if (!(a < b)) throw std::invalid_argument("convex_integral: empty interval");

    struct Piece {
        double p, q;
        GaugeBracket fp, fm, fq;
        double lower() const { return (q - p) * fm.lo; }
        double upper() const { return (q - p) * 0.5 * (fp.hi + fq.hi); }
        double gap() const { return upper() - lower(); }
    };
    struct PieceLess {
        bool operator()(const Piece& x, const Piece& y) const { return x.gap() < y.gap(); }
    };

    GaugeBracket out;
    out.method = GaugeBracket::Method::Quadrature;

    Piece root;
    root.p = a;
    root.q = b;
    root.fp = f(a);
    root.fm = f(0.5 * (a + b));
    root.fq = f(b);
    out.evaluations = 3;

    std::priority_queue<Piece, std::vector<Piece>, PieceLess> heap;
    heap.push(root);
    double totalLo = root.lower();
    double totalHi = root.upper();

    while (totalHi - totalLo > tol) {
        if (out.evaluations + 2 > maxNodes)
            throw BudgetExceeded("convex_integral: node budget reached", totalLo, totalHi,
                                 out.evaluations);
        const Piece top = heap.top();
        heap.pop();
        totalLo -= top.lower();
        totalHi -= top.upper();

        const double mid = 0.5 * (top.p + top.q);
        Piece leftPiece{top.p, mid, top.fp, f(0.5 * (top.p + mid)), top.fm};
        Piece rightPiece{mid, top.q, top.fm, f(0.5 * (mid + top.q)), top.fq};
        out.evaluations += 2;
        totalLo += leftPiece.lower() + rightPiece.lower();
        totalHi += leftPiece.upper() + rightPiece.upper();
        heap.push(leftPiece);
        heap.push(rightPiece);
    }
    out.lo = totalLo;
    out.hi = totalHi;
    return out;
}

GaugeBracket radius_integral(const ComplexMatrix& t, double tol, long budgetPerNode) {
    if (tol <= 0.0) throw std::invalid_argument("radius_integral: tol <= 0");
    const ComplexMatrix td = duggal(t);
    const double scale = std::max(operator_norm(t), 1e-14);
    const double nodeTol = std::max(tol / 4.0, 1e-12 * scale);
    auto f = [&](double s) {
        const ComplexMatrix path = lambda_mean_from(t, td, s);
        if (path.max_abs() == 0.0) return GaugeBracket{};
        return numerical_radius(path, nodeTol, budgetPerNode);
    };
    return convex_integral(f, 0.0, 1.0, tol);
}

GaugeBracket cross_term_sup(const ComplexMatrix& t, double tol, long budget) {
    return cross_term_sup_from(t, duggal(t), tol, budget);
}

GaugeBracket cross_term_sup_from(const ComplexMatrix& t, const ComplexMatrix& duggalOfT,
                                 double tol, long budget) {
    GaugeBracket out;
    out.method = GaugeBracket::Method::GridRefine;
    const double normT = operator_norm(t);
    const double normTd = operator_norm(duggalOfT);
    const double scale = normT * normTd;
    if (scale == 0.0) return out;
    if (tol <= 0.0) tol = 1e-6 * scale;
    const double lip = 2.0 * scale;

    auto g = [&](double theta) {
        return operator_norm(rotated_hermitian_part(t, theta) *
                             rotated_hermitian_part(duggalOfT, theta));
    };

    // theta -> theta + pi flips both factors' signs, so the sup lives on [0, pi].
    constexpr int kInitial = 16;
    std::vector<double> th(kInitial + 1), gv(kInitial + 1);
    double lo = 0.0;
    for (int j = 0; j <= kInitial; ++j) {
        th[j] = kPi * j / kInitial;
        gv[j] = g(th[j]);
        lo = std::max(lo, gv[j]);
    }
    out.evaluations = kInitial + 1;

    std::priority_queue<Cell, std::vector<Cell>, CellLess> heap;
    for (int j = 0; j < kInitial; ++j) {
        Cell cell{th[j], th[j + 1], gv[j], gv[j + 1], 0.0};
        cell.ub = std::max(cell.fa, cell.fb) + 0.5 * lip * (cell.b - cell.a);
        heap.push(cell);
    }

    while (!heap.empty()) {
        const Cell top = heap.top();
        const double hi = std::max(lo, top.ub);
        if (hi - lo <= tol) {
            out.lo = lo;
            out.hi = hi;
            return out;
        }
        if (out.evaluations >= budget)
            throw BudgetExceeded("cross_term_sup: evaluation budget reached", lo, hi,
                                 out.evaluations);
        heap.pop();
        const double mid = 0.5 * (top.a + top.b);
        const double gm = g(mid);
        ++out.evaluations;
        lo = std::max(lo, gm);
        Cell leftCell{top.a, mid, top.fa, gm, 0.0};
        leftCell.ub = std::max(leftCell.fa, leftCell.fb) + 0.5 * lip * (mid - top.a);
        Cell rightCell{mid, top.b, gm, top.fb, 0.0};
        rightCell.ub = std::max(rightCell.fa, rightCell.fb) + 0.5 * lip * (top.b - mid);
        heap.push(leftCell);
        heap.push(rightCell);
    }
    out.lo = out.hi = lo;
    return out;
}

double rank_one_radius(const CVec& x, const CVec& y) {
    if (x.size() != y.size()) throw std::invalid_argument("rank_one_radius: dimension mismatch");
    return 0.5 * (std::abs(inner(x, y)) + vec_norm(x) * vec_norm(y));
}

EqualityWitness equality_witness(const ComplexMatrix& t, double lambda, double eqTol) {
    if (lambda <= 0.0 || lambda >= 1.0)
        throw std::invalid_argument("equality_witness: lambda outside (0, 1)");
    (void)lambda;  // the witness itself is lambda-free; lambda fixes the claim tested
    const ComplexMatrix td = duggal(t);
    EqualityWitness w;
    const ComplexMatrix cross = td.adjoint() * t;
    if (cross.max_abs() > 0.0) w.value = hermitian_lambda_max(hermitian_part(cross));
    const double normSq = operator_norm(t);
    const double n2 = normSq * normSq;
    w.attained = std::abs(w.value - n2) <= eqTol * std::max(n2, 1e-14);
    return w;
}

}  // namespace lmt
