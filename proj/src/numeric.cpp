#include "oloid/numeric.hpp"

#include <cmath>
#include <queue>
#include <vector>

namespace oloid::numeric {

namespace {

double simpson(double a, double b, double fa, double fm, double fb) { return (b - a) / 6.0 * (fa + 4.0 * fm + fb); }

struct Panel {
    double a, b;
    double fa, flm, fm, frm, fb;
    double estimate;
    double error;
    int depth;
    bool operator<(const Panel& other) const { return error < other.error; }
};

constexpr long kEvaluationBudget = 2'000'000;

Panel make_panel(const std::function<double(double)>& f, double a, double b, double fa, double fm, double fb,
                 int depth) {
    const double m = 0.5 * (a + b);
    const double flm = f(0.5 * (a + m));
    const double frm = f(0.5 * (m + b));
    const double whole = simpson(a, b, fa, fm, fb);
    const double halves = simpson(a, m, fa, flm, fm) + simpson(m, b, fm, frm, fb);
    const double delta = halves - whole;
    return {a, b, fa, flm, fm, frm, fb, halves + delta / 15.0, std::abs(delta) / 15.0, depth};
}

}  // namespace

Quadrature adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol, int max_depth) {
    Quadrature acc;
    if (a == b) return acc;
    // Start from a few panels so that a symmetric integrand cannot fool the
    // first error estimate, then always split the panel with the largest
    // error estimate until the total meets tol.
    constexpr int kPanels = 8;
    std::priority_queue<Panel> open;
    double open_error = 0.0;
    long evaluations = 0;
    double x0 = a;
    double f0 = f(a);
    for (int i = 1; i <= kPanels; ++i) {
        const double x1 = i == kPanels ? b : a + (b - a) * i / kPanels;
        const double f1 = f(x1);
        const Panel panel = make_panel(f, x0, x1, f0, f(0.5 * (x0 + x1)), f1, 0);
        open_error += panel.error;
        open.push(panel);
        evaluations += 4;
        x0 = x1;
        f0 = f1;
    }
    double settled_error = 0.0;
    std::vector<Panel> settled;
    while (!open.empty() && open_error + settled_error > tol && evaluations < kEvaluationBudget) {
        const Panel p = open.top();
        open.pop();
        open_error -= p.error;
        if (p.depth >= max_depth) {
            settled.push_back(p);
            settled_error += p.error;
            continue;
        }
        const double m = 0.5 * (p.a + p.b);
        const Panel left = make_panel(f, p.a, m, p.fa, p.flm, p.fm, p.depth + 1);
        const Panel right = make_panel(f, m, p.b, p.fm, p.frm, p.fb, p.depth + 1);
        evaluations += 4;
        open_error += left.error + right.error;
        open.push(left);
        open.push(right);
    }
    while (!open.empty()) {
        settled.push_back(open.top());
        open.pop();
    }
    for (const auto& p : settled) {
        acc.value += p.estimate;
        acc.error_estimate += p.error;
    }
    return acc;
}

}  // namespace oloid::numeric
