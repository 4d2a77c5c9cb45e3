#include "hypstable/quadrature.hpp"

#include <cmath>
#include <queue>
#include <vector>

namespace hypstable {

namespace {

// Gauss-Kronrod 15-point nodes/weights on [-1, 1] (positive half; node 0 last).
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
constexpr double kWg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469};

struct Panel {
    double a, b, value, error;
    bool operator<(const Panel& o) const { return error < o.error; }
};

Panel eval_panel(const Integrand& f, double a, double b) {
    double h = 0.5 * (b - a), mid = 0.5 * (a + b);
    double fv[15];
    for (int i = 0; i < 7; ++i) {
        fv[i] = f(mid - h * kXgk[i]);
        fv[14 - i] = f(mid + h * kXgk[i]);
    }
    fv[7] = f(mid);
    double resk = 0.0, resg = 0.0;
    for (int i = 0; i < 7; ++i) resk += kWgk[i] * (fv[i] + fv[14 - i]);
    resk += kWgk[7] * fv[7];
    resg = kWg[3] * fv[7];
    for (int i = 0; i < 3; ++i) resg += kWg[i] * (fv[2 * i + 1] + fv[13 - 2 * i]);
    double value = resk * h;
    double err = std::abs((resk - resg) * h);
    return {a, b, value, err};
}

}  // namespace

double integrate(const Integrand& f, double a, double b,
                 const EvalPrecision& prec) {
    if (a == b) return 0.0;
    std::priority_queue<Panel> heap;
    Panel p0 = eval_panel(f, a, b);
    double total = p0.value, toterr = p0.error;
    double scale = std::abs(p0.value);
    heap.push(p0);
    int used = 1;
    // tolerance is relative to the L1 mass so that cancelling integrands
    // (e.g. near-odd ones) terminate
    while (toterr > prec.rel_tol * std::max(std::abs(total), 0.01 * scale) &&
           toterr > 1e-300) {
        if (used >= prec.max_quad_subdivisions)
            throw no_convergence("integrate: subdivision limit reached");
        Panel worst = heap.top();
        heap.pop();
        double mid = 0.5 * (worst.a + worst.b);
        Panel l = eval_panel(f, worst.a, mid);
        Panel r = eval_panel(f, mid, worst.b);
        total += l.value + r.value - worst.value;
        toterr += l.error + r.error - worst.error;
        scale = std::max(scale, std::abs(l.value) + std::abs(r.value));
        heap.push(l);
        heap.push(r);
        ++used;
    }
    return total;
}

double integrate_endpoint_power(const Integrand& f, double a, double b,
                                double gamma_a, double gamma_b,
                                const EvalPrecision& prec) {
    if (a == b) return 0.0;
    double mid = 0.5 * (a + b);
    double left, right;
    if (gamma_a < 1.0) {
        // x = a + s^(1/gamma_a)
        double inv = 1.0 / gamma_a;
        double smax = std::pow(mid - a, gamma_a);
        left = integrate(
            [&](double s) {
                double dx = std::pow(s, inv);
                return f(a + dx) * inv * dx / s;
            },
            0.0, smax, prec);
    } else {
        left = integrate(f, a, mid, prec);
    }
    if (gamma_b < 1.0) {
        double inv = 1.0 / gamma_b;
        double smax = std::pow(b - mid, gamma_b);
        right = integrate(
            [&](double s) {
                double dx = std::pow(s, inv);
                return f(b - dx) * inv * dx / s;
            },
            0.0, smax, prec);
    } else {
        right = integrate(f, mid, b, prec);
    }
    return left + right;
}

double integrate_to_inf(const Integrand& f, double a, double decay_rate,
                        const EvalPrecision& prec) {
    // x = a - log(1-t)/rate maps [0,1) to [a,inf); integrand stays bounded
    // when f decays at least like exp(-rate x).
    double rate = decay_rate;
    return integrate(
        [&, rate](double t) {
            if (t >= 1.0) return 0.0;
            double x = a - std::log1p(-t) / rate;
            return f(x) / (rate * (1.0 - t));
        },
        0.0, 1.0, prec);
}

double integrate_to_inf_power(const Integrand& f, double a, double gamma_a,
                              double decay_rate, const EvalPrecision& prec) {
    double head = integrate_endpoint_power(f, a, a + 1.0, gamma_a, 1.0, prec);
    double tail = integrate_to_inf(f, a + 1.0, decay_rate, prec);
    return head + tail;
}

}  // namespace hypstable
