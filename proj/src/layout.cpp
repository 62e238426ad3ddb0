#include "shopflow/layout.hpp"

#include <stdexcept>

namespace shopflow {

std::vector<StoreLayout::Segment> StoreLayout::shoppable_segments() const {
    std::vector<Segment> segs;
    segs.reserve(8);
    for (int i = 0; i < 4; ++i) segs.push_back({store.corner(i), store.corner(i + 1)});
    for (int i = 0; i < 4; ++i) segs.push_back({display.corner(i), display.corner(i + 1)});
    return segs;
}

double StoreLayout::shoppable_length() const {
    return 2.0 * (store.width() + store.depth()) + 2.0 * (display.width() + display.depth());
}

Vec2 StoreLayout::point_at_arclength(double u) const {
    for (const Segment& s : shoppable_segments()) {
        const double len = s.length();
        if (u <= len) {
            const Vec2 dir = (s.b - s.a).normalized();
            return s.a + dir * u;
        }
        u -= len;
    }
    return store.corner(0);  // u == total length wraps to the start
}

void StoreLayout::validate() const {
    if (!(store.lo.x < store.hi.x && store.lo.y < store.hi.y))
        throw std::invalid_argument("layout: degenerate store rectangle");
    if (!(display.lo.x > store.lo.x && display.hi.x < store.hi.x &&
          display.lo.y > store.lo.y && display.hi.y < store.hi.y))
        throw std::invalid_argument("layout: display must lie strictly inside the store");
    auto on_boundary = [&](Vec2 p) {
        return store.contains(p) && !store.strictly_inside(p, 1e-12);
    };
    if (!on_boundary(entrance) || !on_boundary(exit))
        throw std::invalid_argument("layout: entrance/exit must sit on the store boundary");
}

}  // namespace shopflow
