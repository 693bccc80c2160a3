#ifndef STIN_DEMAND_HPP
#define STIN_DEMAND_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "stin/types.hpp"

namespace stin {

// Piecewise-linear modulation over continuous slot time. Points are
// (slot position, multiplier) with constant extrapolation outside the
// breakpoints; an empty shape means multiplier 1.
struct DemandShape {
    std::vector<std::pair<double, double>> points;
    double value_at(double slot_pos) const;
};

struct BurstEvent {
    int slot = 0;
    double multiplier = 1.0;
};

struct SliceDemandProfile {
    double base_intensity = 0.0;  // arrivals/s
    DemandShape shape;
    std::vector<BurstEvent> bursts;
};

struct DemandProfile {
    // Indexed by cell, then slice.
    std::vector<std::array<SliceDemandProfile, kSliceCount>> per_cell;
    std::vector<double> uncovered_fraction;  // per cell, in [0, 1]
    uint64_t seed = 0;
};

struct DemandTrace {
    int cell_count = 0;
    int horizon = 0;
    // [cell][slice][slot]
    std::vector<std::array<std::vector<double>, kSliceCount>> intensity;
    std::vector<std::array<std::vector<double>, kSliceCount>> covered;
    std::vector<std::array<std::vector<double>, kSliceCount>> uncovered;
};

struct SlicingWindow {
    int cell_index = 0;
    int index = 0;
    int start_slot = 0;
    int length = 1;
};

void validate(const DemandProfile& profile);

// Per-slot intensities: base * shape(slot midpoint) * burst multiplier, with
// the covered/uncovered split taken from uncovered_fraction. Deterministic
// for a fixed profile.
DemandTrace generate_trace(const DemandProfile& profile, int horizon);

// Homogeneous Poisson arrival timestamps in [0, duration).
std::vector<double> sample_arrivals(double intensity, double duration_s, uint64_t seed);

// Non-homogeneous arrivals by thinning against the shape's maximum; shape
// values are absolute intensities here (arrivals/s as a function of time).
std::vector<double> sample_arrivals_pwl(const DemandShape& intensity_fn, double duration_s,
                                        uint64_t seed);

// Largest w <= w_max (clipped to the horizon) such that every slice's
// intensity stays within relative variation eta of its value at start_slot
// over [start_slot, start_slot + w). Always >= 1.
int next_window_length(const DemandTrace& trace, int cell_index, int start_slot, int w_max,
                       double eta, double lambda_floor = 1e-6);

// Consecutive windows tiling [0, horizon) for one cell.
std::vector<SlicingWindow> build_windows(const DemandTrace& trace, int cell_index, int w_max,
                                         double eta, double lambda_floor = 1e-6);

}  // namespace stin

#endif
