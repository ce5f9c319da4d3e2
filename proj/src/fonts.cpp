#include "tanglekit/fonts.hpp"

namespace tanglekit {

font_set4 fonts4(const pure_state& s) {
    if (s.n != 4) throw dimension_error("fonts4 requires a 4-qubit state");
    font_set4 f;
    for (int i3 = 0; i3 < 2; ++i3)
        for (int i4 = 0; i4 < 2; ++i4) {
            f.d2_12[i3][i4] = s.a(0, 0, i3, i4) * s.a(1, 1, i3, i4) - s.a(1, 0, i3, i4) * s.a(0, 1, i3, i4);
            f.d3_s4[i3][i4] = s.a(0, 0, i3, i4) * s.a(1, 1, i3 ^ 1, i4) - s.a(1, 0, i3, i4) * s.a(0, 1, i3 ^ 1, i4);
            f.d3_s3[i4][i3] = s.a(0, 0, i3, i4) * s.a(1, 1, i3, i4 ^ 1) - s.a(1, 0, i3, i4) * s.a(0, 1, i3, i4 ^ 1);
            f.d4[i3][i4] = s.a(0, 0, i3, i4) * s.a(1, 1, i3 ^ 1, i4 ^ 1) - s.a(1, 0, i3, i4) * s.a(0, 1, i3 ^ 1, i4 ^ 1);
        }
    for (int i2 = 0; i2 < 2; ++i2)
        for (int i4 = 0; i4 < 2; ++i4) {
            f.d2_13[i2][i4] = s.a(0, i2, 0, i4) * s.a(1, i2, 1, i4) - s.a(1, i2, 0, i4) * s.a(0, i2, 1, i4);
            f.d3_s2[i4][i2] = s.a(0, i2, 0, i4) * s.a(1, i2, 1, i4 ^ 1) - s.a(1, i2, 0, i4) * s.a(0, i2, 1, i4 ^ 1);
        }
    for (int i2 = 0; i2 < 2; ++i2)
        for (int i3 = 0; i3 < 2; ++i3)
            f.d2_14[i2][i3] = s.a(0, i2, i3, 0) * s.a(1, i2, i3, 1) - s.a(1, i2, i3, 0) * s.a(0, i2, i3, 1);
    return f;
}

font_set3 fonts3(const pure_state& s) {
    if (s.n != 3) throw dimension_error("fonts3 requires a 3-qubit state");
    font_set3 f;
    for (int i = 0; i < 2; ++i) {
        f.d2_12[i] = s.a(0, 0, i) * s.a(1, 1, i) - s.a(1, 0, i) * s.a(0, 1, i);
        f.d2_13[i] = s.a(0, i, 0) * s.a(1, i, 1) - s.a(1, i, 0) * s.a(0, i, 1);
        f.d3[i] = s.a(0, 0, i) * s.a(1, 1, i ^ 1) - s.a(1, 0, i) * s.a(0, 1, i ^ 1);
    }
    return f;
}

double one_tangle_font_sum(const font_set4& f) {
    double s = 0.0;
    for (int p = 0; p < 2; ++p)
        for (int q = 0; q < 2; ++q)
            s += std::norm(f.d2_12[p][q]) + std::norm(f.d2_13[p][q]) + std::norm(f.d2_14[p][q]) +
                 std::norm(f.d3_s4[p][q]) + std::norm(f.d3_s3[p][q]) + std::norm(f.d3_s2[p][q]) +
                 std::norm(f.d4[p][q]);
    return 4.0 * s;
}

double one_tangle_font_sum(const font_set3& f) {
    double s = 0.0;
    for (int i = 0; i < 2; ++i)
        s += std::norm(f.d2_12[i]) + std::norm(f.d2_13[i]) + std::norm(f.d3[i]);
    return 4.0 * s;
}

} // namespace tanglekit
