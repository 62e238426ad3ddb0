#pragma once

#include <array>
#include <vector>

#include "shopflow/geometry.hpp"

namespace shopflow {

// Rectangular store with one centered display block. Shopping points live
// on the four store walls and the four display edges. Origin is the
// south-west store corner, y pointing north.
struct StoreLayout {
    Rect store{{0.0, 0.0}, {30.0, 30.0}};
    Rect display{{10.0, 10.0}, {20.0, 20.0}};
    Vec2 entrance{15.0, 0.0};  // midpoint of the south wall
    // Keeping the exit off the south wall steers outbound traffic away
    // from the entrance, so admissions are not starved by passers-by.
    Vec2 exit{30.0, 15.0};

    struct Segment {
        Vec2 a;
        Vec2 b;
        double length() const { return dist(a, b); }
    };

    // Four walls then four display edges, in a fixed order so that uniform
    // perimeter sampling is reproducible.
    std::vector<Segment> shoppable_segments() const;
    double shoppable_length() const;
    // Map arclength u in [0, shoppable_length()) to a point.
    Vec2 point_at_arclength(double u) const;

    // A position is legal inside the store and outside the display interior.
    bool position_legal(Vec2 p) const {
        return store.contains(p) && !display.strictly_inside(p);
    }
    // A step is legal when its endpoint is legal and the path does not cut
    // through the display.
    bool step_legal(Vec2 from, Vec2 to) const {
        return position_legal(to) && !segment_crosses_interior(from, to, display);
    }

    void validate() const;  // throws std::invalid_argument on bad geometry
};

}  // namespace shopflow
