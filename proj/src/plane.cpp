#include "lrc/plane.hpp"

#include <algorithm>

namespace lrc {

Fe dot(const Fq3& a, const Fq3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Fq3 cross(const Fq3& a, const Fq3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Fe det3(const Fq3& a, const Fq3& b, const Fq3& c) { return dot(a, cross(b, c)); }

Fq3 sub3(const Fq3& a, const Fq3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }

bool is_zero3(const Fq3& a) { return a[0].is_zero() && a[1].is_zero() && a[2].is_zero(); }

ProjPoint::ProjPoint(Fe x0, Fe x1, Fe x2) : c_{x0, x1, x2} {
    require_same_field(x0, x1);
    require_same_field(x1, x2);
    int lead = 0;
    while (lead < 3 && c_[lead].is_zero()) ++lead;
    if (lead == 3) throw std::invalid_argument("projective point cannot be the zero triple");
    const Fe scale = inv(c_[lead]);
    for (auto& c : c_) c = c * scale;
}

bool ProjPoint::operator==(const ProjPoint& o) const {
    return c_[0] == o.c_[0] && c_[1] == o.c_[1] && c_[2] == o.c_[2];
}

bool ProjPoint::operator<(const ProjPoint& o) const {
    for (int t = 0; t < 3; ++t)
        if (c_[t].idx != o.c_[t].idx) return c_[t].idx < o.c_[t].idx;
    return false;
}

std::vector<AffinePoint> line_points(const Field& f, const AffLine& line) {
    const uint32_t q = f.q();
    if (line.slope != kSlopeInf && (line.slope < 0 || line.slope >= static_cast<int>(q)))
        throw std::invalid_argument("invalid line slope label");
    std::vector<AffinePoint> pts;
    pts.reserve(q);
    if (line.slope == kSlopeInf) {
        for (uint32_t y = 0; y < q; ++y) pts.push_back({line.intercept, f.element(y)});
    } else if (line.slope == 0) {
        for (uint32_t x = 0; x < q; ++x) pts.push_back({f.element(x), line.intercept});
    } else {
        const Fe m = f.element(f.exp_idx(line.slope - 1));
        for (uint32_t x = 0; x < q; ++x) {
            const Fe xe = f.element(x);
            pts.push_back({xe, line.intercept - m * xe});
        }
    }
    return pts;
}

AffLine line_through(const AffinePoint& a, const AffinePoint& b) {
    require_same_field(a.x, b.x);
    if (a == b) throw std::invalid_argument("two distinct points are required");
    if (a.x == b.x) return {kSlopeInf, a.x};
    if (a.y == b.y) return {0, a.y};
    const Fe slope = (b.y - a.y) / (a.x - b.x);
    const int m = static_cast<int>(dlog(slope)) + 1;
    return {m, slope * a.x + a.y};
}

ProjPoint embed(const AffinePoint& p) {
    const Field* f = p.x.field;
    return ProjPoint(f->one(), p.x, p.y);
}

bool collinear(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c) {
    if (a == b || a == c || b == c)
        throw std::invalid_argument("collinearity requires pairwise distinct points");
    return det3(a.vec(), b.vec(), c.vec()).is_zero();
}

bool is_arc(std::span<const ProjPoint> points) {
    const size_t n = points.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (points[i] == points[j])
                throw std::invalid_argument("arc test requires pairwise distinct points");
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            for (size_t k = j + 1; k < n; ++k)
                if (collinear(points[i], points[j], points[k])) return false;
    return true;
}

SlopeMatrix slope_matrix(const Field& f) {
    const uint32_t q = f.q();
    if (q % 2 == 0) throw std::invalid_argument("slope matrix is defined for odd q only");
    if (q < 5) throw std::invalid_argument("slope matrix requires q >= 5");
    const int half = static_cast<int>((q - 1) / 2);
    SlopeMatrix out;
    out.half = half;
    out.entries.assign(q - 1, std::vector<int>(q - 1, 0));
    for (uint32_t a = 0; a < q - 1; ++a)
        for (uint32_t b = 0; b < q - 1; ++b) {
            const uint32_t i = f.exp_idx(a), j = f.exp_idx(b);
            // membership scan: the unique m in [1, q-1] with (i, j) on L(m, 0)
            int found = 0;
            for (uint32_t m = 1; m < q; ++m)
                if (f.add_idx(f.mul_idx(f.exp_idx(m - 1), i), j) == 0) {
                    found = static_cast<int>(m);
                    break;
                }
            out.entries[a][b] = found <= half ? found : found - half;
        }
    return out;
}

}  // namespace lrc
