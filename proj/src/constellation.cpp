#include "stin/constellation.hpp"

#include <algorithm>
#include <set>

#include "stin/parallel.hpp"

namespace stin {

const ApAccess* AccessSnapshot::find(int cell_index, int ap) const {
    const auto& list = per_cell.at(cell_index);
    auto it = std::lower_bound(list.begin(), list.end(), ap,
                               [](const ApAccess& a, int id) { return a.ap < id; });
    if (it != list.end() && it->ap == ap) return &*it;
    return nullptr;
}

void validate(const ConstellationConfig& cfg) {
    if (cfg.orbit_count < 1) throw ValidationError("orbit_count must be >= 1");
    if (cfg.sats_per_orbit < 1) throw ValidationError("sats_per_orbit must be >= 1");
    if (cfg.altitude_m <= 0) throw ValidationError("altitude_m must be > 0");
    if (cfg.inclination_deg < 0 || cfg.inclination_deg > 180)
        throw ValidationError("inclination_deg must be in [0, 180]");
    if (cfg.min_elevation_deg < 0 || cfg.min_elevation_deg >= 90)
        throw ValidationError("min_elevation_deg must be in [0, 90)");
    if (cfg.earth_radius_m <= 0) throw ValidationError("earth_radius_m must be > 0");
}

void validate(const CellMap& cells) {
    if (cells.empty()) throw ValidationError("cell map is empty");
    for (size_t i = 0; i < cells.size(); ++i) {
        if (cells[i].id != static_cast<int>(i) + 1)
            throw ValidationError("cell ids must be contiguous from 1");
        if (cells[i].base_stations < 0) throw ValidationError("base_stations must be >= 0");
        if (cells[i].coverage_fraction < 0 || cells[i].coverage_fraction > 1)
            throw ValidationError("coverage_fraction must be in [0, 1]");
        if (cells[i].terrestrial_distance_m <= 0)
            throw ValidationError("terrestrial_distance_m must be > 0");
    }
}

Vec3 satellite_position(const ConstellationConfig& cfg, int sat_id, double time_s) {
    int idx = sat_id - 1;
    int plane = idx / cfg.sats_per_orbit;
    int slot_in_plane = idx % cfg.sats_per_orbit;

    double a = cfg.orbit_radius_m();
    double mean_motion = std::sqrt(kEarthMu / (a * a * a));
    double raan = 2.0 * M_PI * plane / cfg.orbit_count;
    double phase0 = 2.0 * M_PI * slot_in_plane / cfg.sats_per_orbit +
                    2.0 * M_PI * cfg.phasing_factor * plane /
                        (static_cast<double>(cfg.orbit_count) * cfg.sats_per_orbit);
    double u = phase0 + mean_motion * time_s;  // argument of latitude

    double inc = deg2rad(cfg.inclination_deg);
    double cu = std::cos(u), su = std::sin(u);
    double co = std::cos(raan), so = std::sin(raan);
    double ci = std::cos(inc);
    return {a * (co * cu - so * su * ci), a * (so * cu + co * su * ci),
            a * (su * std::sin(inc))};
}

std::vector<Vec3> propagate(const ConstellationConfig& cfg, int slot, double slot_duration_s) {
    validate(cfg);
    double t = slot * slot_duration_s;
    std::vector<Vec3> out(cfg.satellite_count());
    for (int s = 1; s <= cfg.satellite_count(); ++s) out[s - 1] = satellite_position(cfg, s, t);
    return out;
}

Vec3 cell_position(double lat_deg, double lon_deg, double earth_radius_m) {
    double lat = deg2rad(lat_deg), lon = deg2rad(lon_deg);
    return {earth_radius_m * std::cos(lat) * std::cos(lon),
            earth_radius_m * std::cos(lat) * std::sin(lon), earth_radius_m * std::sin(lat)};
}

double cell_inertial_lon_deg(const ConstellationConfig& cfg, double lon_deg, double time_s) {
    if (!cfg.earth_rotation) return lon_deg;
    return lon_deg + rad2deg(kEarthRotationRadS * time_s);
}

double elevation_angle_deg(Vec3 sat_position, double cell_lat_deg, double cell_lon_deg,
                           double earth_radius_m) {
    Vec3 g = cell_position(cell_lat_deg, cell_lon_deg, earth_radius_m);
    Vec3 up = (1.0 / earth_radius_m) * g;
    Vec3 range = sat_position - g;
    double s = dot(range, up) / norm(range);
    s = std::clamp(s, -1.0, 1.0);
    return rad2deg(std::asin(s));
}

AccessSnapshot access_snapshot(const ConstellationConfig& cfg, const CellMap& cells, int slot,
                               double slot_duration_s) {
    double t = slot * slot_duration_s;
    std::vector<Vec3> sats(cfg.satellite_count());
    for (int s = 1; s <= cfg.satellite_count(); ++s) sats[s - 1] = satellite_position(cfg, s, t);

    AccessSnapshot snap;
    snap.slot = slot;
    snap.per_cell.resize(cells.size());
    for (size_t c = 0; c < cells.size(); ++c) {
        auto& list = snap.per_cell[c];
        double lon = cell_inertial_lon_deg(cfg, cells[c].center_lon_deg, t);
        if (cells[c].base_stations > 0) {
            list.push_back({kTerrestrialAp, cells[c].terrestrial_distance_m, 0.0, 90.0});
        }
        Vec3 g = cell_position(cells[c].center_lat_deg, lon, cfg.earth_radius_m);
        for (int s = 1; s <= cfg.satellite_count(); ++s) {
            double elev = elevation_angle_deg(sats[s - 1], cells[c].center_lat_deg, lon,
                                              cfg.earth_radius_m);
            if (elev >= cfg.min_elevation_deg) {
                double d = norm(sats[s - 1] - g);
                list.push_back({s, d, d / kLightSpeedMps, elev});
            }
        }
        // Satellite loop runs in ascending id order and terrestrial is 0, so
        // the list is already sorted.
    }
    return snap;
}

std::vector<AccessSnapshot> access_snapshots(const ConstellationConfig& cfg, const CellMap& cells,
                                             int first_slot, int count, double slot_duration_s,
                                             int threads) {
    std::vector<AccessSnapshot> out(count);
    parallel_for(count, threads, [&](int i) {
        out[i] = access_snapshot(cfg, cells, first_slot + i, slot_duration_s);
    });
    return out;
}

std::vector<int> window_access_union(std::span<const AccessSnapshot> window, int cell_index) {
    if (window.empty()) throw ValidationError("window_access_union: empty window");
    std::set<int> aps;
    for (const auto& snap : window)
        for (const auto& a : snap.per_cell.at(cell_index)) aps.insert(a.ap);
    return {aps.begin(), aps.end()};
}

}  // namespace stin
