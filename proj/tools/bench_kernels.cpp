// Wall-time comparison of the parallel kernels against their serial
// reference implementations.

#include <chrono>
#include <cstdio>

#include "octad/linking.hpp"
#include "octad/oval_count.hpp"
#include "octad/sample_octads.hpp"
#include "octad/sp6.hpp"

using Clock = std::chrono::steady_clock;

namespace {

double seconds(Clock::time_point a, Clock::time_point b)
{
    return std::chrono::duration<double>(b - a).count();
}

template <typename F>
double timed(F&& f)
{
    auto t0 = Clock::now();
    f();
    return seconds(t0, Clock::now());
}

void row(const char* name, double serial, double parallel)
{
    std::printf("%-28s %10.3fs %10.3fs %8.2fx\n", name, serial, parallel,
                parallel > 0 ? serial / parallel : 0.0);
}

} // namespace

int main()
{
    std::printf("%-28s %11s %11s %9s\n", "kernel", "serial", "parallel", "speedup");

    {
        double s = timed([] { octad::f2::isometry_group_serial(std::nullopt); });
        double p = timed([] { octad::f2::isometry_group(std::nullopt); });
        row("symplectic enumeration", s, p);
    }

    auto octad_pts = octad::geo::sample_regular_octad(42);
    {
        double s = timed([&] { octad::geo::octad_signs_serial(octad_pts); });
        double p = timed([&] { octad::geo::octad_signs(octad_pts); });
        row("chirality sign scan", s, p);
    }

    {
        std::array<octad::geo::ProjPoint, 7> seven;
        std::copy(octad_pts.begin(), octad_pts.begin() + 7, seven.begin());
        auto hess = octad::geo::hessian(octad::geo::net_through(seven));
        double s = timed([&] { octad::geo::count_components_serial(hess, 9); });
        double p = timed([&] { octad::geo::count_components(hess, 9); });
        row("oval grid scan (depth 9)", s, p);
    }

    return 0;
}
