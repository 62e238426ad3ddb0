#include "shopflow/geometry.hpp"

#include <algorithm>

namespace shopflow {

bool segment_crosses_interior(Vec2 a, Vec2 b, const Rect& rect) {
    // Slab clip of the parametric segment a + t(b-a), t in [0,1].
    double t0 = 0.0, t1 = 1.0;
    const Vec2 d = b - a;
    const double mins[2] = {rect.lo.x, rect.lo.y};
    const double maxs[2] = {rect.hi.x, rect.hi.y};
    const double orig[2] = {a.x, a.y};
    const double dir[2] = {d.x, d.y};
    for (int ax = 0; ax < 2; ++ax) {
        if (dir[ax] == 0.0) {
            if (orig[ax] < mins[ax] || orig[ax] > maxs[ax]) return false;
        } else {
            double u = (mins[ax] - orig[ax]) / dir[ax];
            double v = (maxs[ax] - orig[ax]) / dir[ax];
            if (u > v) std::swap(u, v);
            t0 = std::max(t0, u);
            t1 = std::min(t1, v);
            if (t0 > t1) return false;
        }
    }
    if (t1 - t0 <= 1e-12) return false;  // corner graze or tangential touch
    const Vec2 mid = a + d * (0.5 * (t0 + t1));
    return rect.strictly_inside(mid);
}

}  // namespace shopflow
