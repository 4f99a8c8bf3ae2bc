#ifndef QUINTIC_TOOLS_REFERENCE_TABLES_HPP
#define QUINTIC_TOOLS_REFERENCE_TABLES_HPP

// Embedded copies of the published low-degree tables, used by
// `pentarray --check-paper` to diff freshly computed matrices against the
// reference values.

#include <optional>
#include <vector>

#include "quintic/pentops.hpp"

namespace quintic::tables {

inline IntMatrix from_rows(const std::vector<std::vector<long>>& rows) {
    IntMatrix m(static_cast<long>(rows.size()), static_cast<long>(rows[0].size()));
    for (long r = 0; r < m.rows; ++r)
        for (long c = 0; c < m.cols; ++c) m.at(r, c) = rows[static_cast<size_t>(r)][static_cast<size_t>(c)];
    return m;
}

/// Published pentamidiation array B_d (columns of the degree-5d expansion).
inline std::optional<IntMatrix> pent_reference(long d) {
    switch (d) {
        case 1:
            return from_rows({{1, 0}, {3, 1}, {4, -2}, {2, 4}, {1, -3}, {0, 1}});
        case 2:
            return from_rows({{1, 0, 0},
                              {6, 1, 0},
                              {17, 1, 1},
                              {28, 2, -4},
                              {30, 3, 12},
                              {22, 5, -22},
                              {12, -3, 30},
                              {4, 2, -28},
                              {1, -1, 17},
                              {0, 1, -6},
                              {0, 0, 1}});
        default:
            return std::nullopt;
    }
}

/// Published multisection matrix A_d.
inline std::optional<IntMatrix> hecke_reference(long d) {
    switch (d) {
        case 2:
            return from_rows({{1, 0, 0}, {22, 5, -22}, {0, 0, 1}});
        case 3:
            return from_rows({{1, 0, 0, 0}, {264, 25, 0, 24}, {24, 0, 25, -264}, {0, 0, 0, 1}});
        case 4:
            return from_rows({{1, 0, 0, 0, 0},
                              {1356, 115, 10, 10, -8},
                              {1462, 110, 15, -110, 1462},
                              {8, 10, -10, 115, -1356},
                              {0, 0, 0, 0, 1}});
        case 5:
            return from_rows({{1, 0, 0, 0, 0, 0},
                              {4603, 410, 35, 5, -5, 1},
                              {25494, 2360, 235, -20, 270, -2272},
                              {2272, 270, 20, 235, -2360, 25494},
                              {1, 5, 5, -35, 410, -4603},
                              {0, 0, 0, 0, 0, 1}});
        case 6:
            return from_rows({{1, 0, 0, 0, 0, 0, 0},
                              {12228, 1126, 102, 9, -2, 1, 0},
                              {232494, 21353, 1931, 177, 94, -647, 1626},
                              {108772, 8994, 688, 71, -688, 8994, -108772},
                              {1626, 647, 94, -177, 1931, -21353, 232494},
                              {0, 1, 2, 9, -102, 1126, -12228},
                              {0, 0, 0, 0, 0, 0, 1}});
        default:
            return std::nullopt;
    }
}

/// Published coefficient heads of the level-one Eisenstein series.
inline const std::vector<long>& e4_reference() {
    static const std::vector<long> v{1, 240, 2160, 6720, 17520, 30240};
    return v;
}
inline const std::vector<long>& e6_reference() {
    static const std::vector<long> v{1, -504, -16632, -122976, -532728, -1575504};
    return v;
}

/// Published coefficients 5^2*63, 5^5*52, 5^7*63, 5^10*6, 5^12 of the
/// degree-four polynomial in the p(25n+24) generating identity.
inline const std::vector<quintic::Int>& bvf1_reference() {
    static const std::vector<quintic::Int> v = [] {
        std::vector<quintic::Int> w;
        auto p5 = [](int e) {
            quintic::Int r = 1;
            for (int i = 0; i < e; ++i) r *= 5;
            return r;
        };
        w.push_back(63 * p5(2));
        w.push_back(52 * p5(5));
        w.push_back(63 * p5(7));
        w.push_back(6 * p5(10));
        w.push_back(p5(12));
        return w;
    }();
    return v;
}

/// Published polynomial solutions f_1..f_8 of the second-order equation
/// (coefficient lists in ascending powers of t).
inline const std::vector<std::vector<long>>& kaneko_reference() {
    static const std::vector<std::vector<long>> v{
        {1, 7},
        {1, 39, -26},
        {1, 171, 247, -57},
        {1, -465, -10385, -2945, -8370, 682},
        {1, -333, -17390, -54390, 26640, -64158, 3774},
        {1, -301, -36421, -310245, 10535, -422303, 283843, -12857},
        {1, -294, -101528, -1798692, -2747430, -387933, -2086028, 740544, -26999},
    };
    return v;
}

/// Published 5x5 recurrence matrix for the tau multisection vectors.
inline const std::vector<std::vector<long>>& tau_recurrence_reference() {
    static const std::vector<std::vector<long>> v{
        {4465, -440, 45, -5, 1},
        {-331760, 28510, -2530, 245, -44},
        {5407380, -516505, 47515, -4435, 722},
        {-38890280, 3700355, -362890, 34960, -5192},
        {98835800, -9405550, 917650, -97600, 13195}};
    return v;
}

}  // namespace quintic::tables

#endif
