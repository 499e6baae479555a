#include "heawood/geom.hpp"

namespace heawood {

const char* to_string(IntersectStatus s)
{
    switch (s) {
    case IntersectStatus::Ok:
        return "ok";
    case IntersectStatus::NoIntersection:
        return "no intersection";
    case IntersectStatus::Tangent:
        return "tangent";
    case IntersectStatus::ConcentricCircles:
        return "concentric circles";
    }
    return "unknown";
}

Real default_tolerance(Precision p) { return pow10(-(p.digits() / 2), p); }

} // namespace heawood
