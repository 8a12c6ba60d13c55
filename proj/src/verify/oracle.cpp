#include "stieltjes/verify/oracle.hpp"

#include "stieltjes/errors.hpp"

#include <array>
#include <cmath>
#include <queue>
#include <vector>

namespace stieltjes::verify {

namespace {

// Gauss-Kronrod 15-point abscissae (non-negative half) and weights.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss 7-point weights at the odd Kronrod abscissae (kXgk[1], [3], [5], [7]).
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Piece {
    double a;
    double b;
    double value;
    double error;
    bool operator<(const Piece& o) const { return error < o.error; }
};

Piece kronrod(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double fc = f(c);
    double k = fc * kWgk[7];
    double g = fc * kWg[3];
    for (int i = 0; i < 7; ++i) {
        const double dx = h * kXgk[i];
        const double pair = f(c - dx) + f(c + dx);
        k += kWgk[i] * pair;
        if (i % 2 == 1) g += kWg[i / 2] * pair;
    }
    return {a, b, k * h, std::abs((k - g) * h)};
}

}  // namespace

OracleResult adaptive_kronrod(const std::function<double(double)>& f, double a, double b, double rel_tol,
                              double abs_tol, int max_intervals) {
    constexpr int kInitial = 64;
    std::priority_queue<Piece> heap;
    double value = 0.0;
    double error = 0.0;
    for (int i = 0; i < kInitial; ++i) {
        const double lo = a + (b - a) * i / kInitial;
        const double hi = a + (b - a) * (i + 1) / kInitial;
        Piece p = kronrod(f, lo, hi);
        value += p.value;
        error += p.error;
        heap.push(p);
    }
    OracleResult out;
    while (static_cast<int>(heap.size()) < max_intervals) {
        if (error <= std::max(abs_tol, rel_tol * std::abs(value))) {
            out.converged = true;
            break;
        }
        const Piece worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        const Piece left = kronrod(f, worst.a, mid);
        const Piece right = kronrod(f, mid, worst.b);
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
    }
    // re-sum to shed drift from the running updates
    value = 0.0;
    error = 0.0;
    out.intervals = static_cast<int>(heap.size());
    std::vector<Piece> pieces;
    while (!heap.empty()) {
        pieces.push_back(heap.top());
        heap.pop();
    }
    long double sv = 0.0L;
    long double se = 0.0L;
    for (const auto& p : pieces) {
        sv += p.value;
        se += p.error;
    }
    out.value = static_cast<double>(sv);
    out.error = static_cast<double>(se);
    out.converged = out.converged || out.error <= std::max(abs_tol, rel_tol * std::abs(out.value));
    return out;
}

OracleResult oracle_moment(const PerturbedDensity& d, int n, double rel_tol) {
    const double k = d.weight().k();
    // Window wide enough for the Gaussian in t whatever its centre; the
    // integrand is negligible beyond |t| ~ |n+1|/k^2 + 12/k.
    const double half = std::abs(n + 1.0) / (k * k) + 14.0 / k + 2.0;
    auto integrand = [&d, n](double t) {
        const long double x = std::exp(static_cast<long double>(t));
        return static_cast<double>(std::exp(static_cast<long double>(n + 1) * t) * d(x));
    };
    return adaptive_kronrod(integrand, -half, half, rel_tol);
}

}  // namespace stieltjes::verify
