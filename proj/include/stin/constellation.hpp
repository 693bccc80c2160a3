#ifndef STIN_CONSTELLATION_HPP
#define STIN_CONSTELLATION_HPP

#include <span>
#include <vector>

#include "stin/types.hpp"

namespace stin {

// Circular Walker-delta shell. Plane p has its ascending node at
// 2*pi*p/orbit_count on the equator (+x axis for plane 0); satellite q of a
// plane starts 2*pi*q/sats_per_orbit past the node, plus the inter-plane
// phasing term 2*pi*phasing_factor*p/(orbit_count*sats_per_orbit).
struct ConstellationConfig {
    int orbit_count = 1;
    int sats_per_orbit = 1;
    double altitude_m = 550e3;
    double inclination_deg = 53.0;
    double phasing_factor = 1.0;
    double earth_radius_m = 6371e3;
    double min_elevation_deg = 40.0;
    // Cells rotate with Earth at the sidereal rate; can be frozen for
    // geometry debugging.
    bool earth_rotation = true;

    int satellite_count() const { return orbit_count * sats_per_orbit; }
    double orbit_radius_m() const { return earth_radius_m + altitude_m; }
};

struct Cell {
    int id = 0;  // 1-based, contiguous
    double center_lat_deg = 0.0;
    double center_lon_deg = 0.0;
    int base_stations = 0;  // A_n
    double coverage_fraction = 1.0;
    // Mean user-to-base-station distance used by the terrestrial pathloss.
    double terrestrial_distance_m = 500.0;
};

using CellMap = std::vector<Cell>;

struct ApAccess {
    int ap = 0;
    double distance_m = 0.0;
    double prop_delay_s = 0.0;
    double elevation_deg = 0.0;  // 90 for the terrestrial entry
};

// Accessible access points per cell at one slot, sorted by ascending ap id
// (terrestrial first when present).
struct AccessSnapshot {
    int slot = 0;
    std::vector<std::vector<ApAccess>> per_cell;

    const ApAccess* find(int cell_index, int ap) const;
    bool accessible(int cell_index, int ap) const { return find(cell_index, ap) != nullptr; }
};

void validate(const ConstellationConfig& cfg);
void validate(const CellMap& cells);

// Satellite ids are 1 + plane*sats_per_orbit + index_in_plane.
Vec3 satellite_position(const ConstellationConfig& cfg, int sat_id, double time_s);

// All satellite positions at slot t (time = t * slot_duration).
std::vector<Vec3> propagate(const ConstellationConfig& cfg, int slot, double slot_duration_s);

// Cell-center position in the inertial frame; lon_deg is taken as the
// inertial longitude at the evaluation instant.
Vec3 cell_position(double lat_deg, double lon_deg, double earth_radius_m);

// Inertial longitude of a rotating cell at time t.
double cell_inertial_lon_deg(const ConstellationConfig& cfg, double lon_deg, double time_s);

// Elevation of the satellite above the cell's local horizon, in [-90, 90].
double elevation_angle_deg(Vec3 sat_position, double cell_lat_deg, double cell_lon_deg,
                           double earth_radius_m);

AccessSnapshot access_snapshot(const ConstellationConfig& cfg, const CellMap& cells, int slot,
                               double slot_duration_s);

// Snapshots for slots [first_slot, first_slot + count); OpenMP across slots
// when threads > 1, identical output to the serial loop either way.
std::vector<AccessSnapshot> access_snapshots(const ConstellationConfig& cfg, const CellMap& cells,
                                             int first_slot, int count, double slot_duration_s,
                                             int threads = 1);

// Union of the per-slot accessible sets over a window. Throws on an empty
// window.
std::vector<int> window_access_union(std::span<const AccessSnapshot> window, int cell_index);

}  // namespace stin

#endif
