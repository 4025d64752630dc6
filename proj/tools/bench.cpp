// Timings for the data-parallel kernels against their serial references.
// The outputs must match bit-for-bit; the table reports the speedup.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <vector>

#include "mplab/counterexample.hpp"
#include "mplab/disc_space.hpp"
#include "mplab/drifted.hpp"
#include "mplab/parallel.hpp"

using namespace mplab;

namespace {

double now_ms() {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

template <class F>
double time_ms(const F& f, int reps) {
    double best = 1e300;
    for (int i = 0; i < reps; ++i) {
        double t0 = now_ms();
        f();
        best = std::min(best, now_ms() - t0);
    }
    return best;
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::fabs(a[i] - b[i]));
    return d;
}

void row(const char* name, double ser, double par, double diff) {
    std::printf("%-28s %10.2f ms %10.2f ms %8.2fx %10.3g\n", name, ser, par, ser / par, diff);
}

}  // namespace

int main() {
    std::printf("threads: %d\n", max_threads());
    std::printf("%-28s %13s %13s %9s %10s\n", "kernel", "serial", "parallel", "speedup",
                "max|diff|");

    {
        CuspFamily f = build_cusp(1.0);
        std::vector<double> a, b;
        double ser = time_ms([&] { residual_sweep_serial(f, 50.0, 2000000, a); }, 3);
        double par = time_ms([&] { residual_sweep_parallel(f, 50.0, 2000000, b); }, 3);
        row("residual_sweep (2e6 pts)", ser, par, max_abs_diff(a, b));
    }

    ModelManifold m = make_manifold("euclidean");
    AlphaSolution alpha = solve_alpha(m, 3.0);
    DiscreteDisc2D disc(m, alpha, 2.5, 56, 56);

    std::vector<int> poles;
    for (int i = 0; i < disc.nr() - 1; ++i)
        for (int j = 0; j < disc.ntheta(); j += 4) poles.push_back(disc.node(i, j));

    {
        std::vector<std::vector<double>> a, b;
        double ser = time_ms([&] { green_columns_serial(disc, poles, a); }, 3);
        double par = time_ms([&] { green_columns_parallel(disc, poles, b); }, 3);
        double d = 0;
        for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, max_abs_diff(a[i], b[i]));
        char label[64];
        std::snprintf(label, sizeof(label), "green_columns (%zu poles)", poles.size());
        row(label, ser, par, d);
    }

    {
        disc.ensure_columns(poles);
        std::vector<double> v(disc.nodes());
        for (int p = 0; p < disc.nodes(); ++p)
            v[p] = std::max(alpha.value(disc.t_of(p)) - 1.5, -0.5) / alpha.value(disc.t_of(p));
        double scale = disc.suggest_radius_scale(16.0);
        std::vector<double> a, b;
        double ser =
            time_ms([&] { mollified_mean_field_serial(disc, v, poles, 2.0, scale, a); }, 3);
        double par =
            time_ms([&] { mollified_mean_field_parallel(disc, v, poles, 2.0, scale, b); }, 3);
        char label[64];
        std::snprintf(label, sizeof(label), "mollified_mean (%zu ctr)", poles.size());
        row(label, ser, par, max_abs_diff(a, b));
    }
    return 0;
}
