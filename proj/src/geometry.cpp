#include "mbetsim/geometry.hpp"

#include <cmath>

#include "mbetsim/errors.hpp"

namespace mbetsim {

RelativeGeometry relative_geometry(const AircraftState& leader, const AircraftState& wingman) {
    const double dx = leader.pos_x - wingman.pos_x;
    const double dy = leader.pos_y - wingman.pos_y;
    RelativeGeometry g;
    g.range = std::hypot(dx, dy);
    g.heading_err = leader.heading - wingman.heading;
    if (g.range == 0.0) {
        // Bearing is undefined when the aircraft coincide; report it as zero
        // and flag the sample so callers can decide how to handle it.
        g.bearing = 0.0;
        g.lon_sep = 0.0;
        g.lat_sep = 0.0;
        g.degenerate = true;
        return g;
    }
    g.bearing = std::atan2(dy, dx);
    const double a = wingman.heading - g.bearing;
    g.lon_sep = g.range * std::cos(a);
    g.lat_sep = g.range * std::sin(a);
    return g;
}

RelativeRates relative_rates(const AircraftState& leader, const AircraftState& wingman,
                             double wingman_heading_rate) {
    const RelativeGeometry g = relative_geometry(leader, wingman);
    if (g.degenerate) {
        throw DegenerateRangeError("relative_rates: range is zero, rates are undefined");
    }
    const double lam = g.bearing;
    RelativeRates r;
    r.range_rate = leader.speed * std::cos(leader.heading - lam) -
                   wingman.speed * std::cos(wingman.heading - lam);
    r.bearing_rate = (leader.speed * std::sin(leader.heading - lam) -
                      wingman.speed * std::sin(wingman.heading - lam)) /
                     g.range;
    r.lon_rate = leader.speed * std::cos(g.heading_err) - wingman.speed -
                 g.lat_sep * wingman_heading_rate;
    r.lat_rate = g.lon_sep * wingman_heading_rate - leader.speed * std::sin(g.heading_err);
    return r;
}

}  // namespace mbetsim
