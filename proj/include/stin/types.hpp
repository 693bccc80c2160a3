#ifndef STIN_TYPES_HPP
#define STIN_TYPES_HPP

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace stin {

// Access point 0 is the cell's virtual terrestrial access point; satellites
// are numbered 1..orbit_count*sats_per_orbit.
constexpr int kTerrestrialAp = 0;

// Slice indices. Slice 0 is delay-sensitive (hard reliability target),
// slice 1 is delay-tolerant (soft expected-delay target).
constexpr int kSliceCount = 2;
constexpr int kSliceSensitive = 0;
constexpr int kSliceTolerant = 1;

constexpr double kLightSpeedMps = 2.998e8;
constexpr double kEarthMu = 3.986e14;  // m^3/s^2
// Sidereal rotation rate, 2*pi / 86164.0905 s.
constexpr double kEarthRotationRadS = 7.292115855306587e-5;

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;
};

inline Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator*(double s, Vec3 a) { return {s * a.x, s * a.y, s * a.z}; }
inline double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline double norm(Vec3 a) { return std::sqrt(dot(a, a)); }

inline double deg2rad(double d) { return d * M_PI / 180.0; }
inline double rad2deg(double r) { return r * 180.0 / M_PI; }

inline bool is_satellite(int ap) { return ap != kTerrestrialAp; }

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace stin

#endif
