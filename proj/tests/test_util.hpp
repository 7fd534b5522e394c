#ifndef PDARRAY_TEST_UTIL_HPP
#define PDARRAY_TEST_UTIL_HPP

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace testutil {

#ifndef PDARRAY_TEST_DATA_DIR
#define PDARRAY_TEST_DATA_DIR "tests/data"
#endif

inline std::string data_path(const std::string& name) {
    return std::string(PDARRAY_TEST_DATA_DIR) + "/" + name;
}

struct CsvRow {
    std::vector<std::string> cells;
    double num(std::size_t i) const { return std::stod(cells.at(i)); }
};

inline std::vector<CsvRow> load_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("test data not found: " + path);
    std::vector<CsvRow> rows;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (first) { // skip header
            first = false;
            continue;
        }
        CsvRow row;
        std::istringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) row.cells.push_back(cell);
        rows.push_back(std::move(row));
    }
    return rows;
}

// Independent power-series I0: sum (x/2)^{2k} / (k!)^2 in extended precision.
inline long double bessel_i0_series(long double x) {
    const long double q = x * x / 4.0L;
    long double term = 1.0L, sum = 1.0L;
    for (int k = 1; k < 500; ++k) {
        term *= q / (static_cast<long double>(k) * k);
        sum += term;
        if (term < sum * 1e-20L) break;
    }
    return sum;
}

// Independent direct Marcum series from k = 0 with the incomplete-gamma
// recurrence, in extended precision. Valid while exp(-a^2/2) is normal.
inline long double marcum_q_series(int m, long double a, long double b) {
    const long double lam = a * a / 2.0L;
    const long double x = b * b / 2.0L;
    long double t = std::exp(-x);
    long double upper = 0.0L;
    for (int j = 0; j < m; ++j) {
        upper += t;
        t *= x / static_cast<long double>(j + 1);
    }
    long double p = std::exp(-lam), sum = 0.0L, mass = 0.0L;
    for (long k = 0; k < 400000; ++k) {
        sum += p * upper;
        mass += p;
        if (1.0L - mass < 1e-18L) break;
        p *= lam / static_cast<long double>(k + 1);
        upper += t;
        t *= x / static_cast<long double>(k + m + 1);
    }
    return sum;
}

// Brute-force hex lattice: every integer axial coordinate within max-norm
// `rings`, spacing 2*rho. Used to cross-check the ring-walk generator.
struct BruteSite {
    double x, y;
    int ring;
    bool corner;
};

inline std::vector<BruteSite> brute_hex_sites(int rings, double rho) {
    std::vector<BruteSite> out;
    const double s = 2.0 * rho;
    for (int q = -rings; q <= rings; ++q) {
        for (int r = -rings; r <= rings; ++r) {
            const int ss = -q - r;
            const int ring = std::max({std::abs(q), std::abs(r), std::abs(ss)});
            if (ring > rings) continue;
            const long norm = static_cast<long>(q) * q + static_cast<long>(q) * r +
                              static_cast<long>(r) * r;
            out.push_back({s * (q + 0.5 * r), s * 0.8660254037844386467637231707529 * r, ring,
                           norm == static_cast<long>(ring) * ring && ring > 0});
        }
    }
    return out;
}

} // namespace testutil

#endif
