// Compares the OpenMP kernels against their serial reference paths:
// candidate-tuple enumeration in the intersection search and the oracle
// verification sweep.
#include <chrono>
#include <iostream>

#include "trop/report.hpp"

using namespace trop;
using Clock = std::chrono::steady_clock;

static double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

int main(int argc, char** argv) {
    int trials = argc > 1 ? std::atoi(argv[1]) : 3;
    FieldSpec field = FieldSpec::rationals();

    std::cout << "intersection search (dense degrees 4 and 5, n = 2)\n";
    for (int t = 0; t < trials; ++t) {
        Generator gen(field, 1000 + t);
        auto surfs = gen.random_config({4, 5});
        auto t0 = Clock::now();
        auto serial = find_transverse_intersections_serial(surfs, field);
        double ts = seconds_since(t0);
        t0 = Clock::now();
        auto parallel = find_transverse_intersections(surfs, field);
        double tp = seconds_since(t0);
        bool same = serial.size() == parallel.size();
        for (size_t i = 0; same && i < serial.size(); ++i)
            same = serial[i].point == parallel[i].point;
        std::cout << "  trial " << t << ": serial " << ts << "s, parallel " << tp
                  << "s, speedup " << ts / tp << "x, results "
                  << (same ? "identical" : "DIFFER") << "\n";
    }

    std::cout << "oracle verification sweep (200 systems, n = 3, m <= 10)\n";
    for (int t = 0; t < trials; ++t) {
        auto t0 = Clock::now();
        auto rs = verify_report(3, 10, 200, field, 2000 + t, false);
        double ts = seconds_since(t0);
        t0 = Clock::now();
        auto rp = verify_report(3, 10, 200, field, 2000 + t, true);
        double tp = seconds_since(t0);
        bool same = rs["verified"] == rp["verified"];
        std::cout << "  trial " << t << ": serial " << ts << "s, parallel " << tp
                  << "s, speedup " << ts / tp << "x, results "
                  << (same ? "identical" : "DIFFER") << "\n";
    }
    return 0;
}
