#pragma once

// Single conversion boundary between the SI values used inside the dispersion
// formulas and the engineering units exposed at the API (um, nm, km,
// ps/(nm*km), ns, Gbit/s).

namespace awg::units {

/// Speed of light used by the dispersion formulas, m/s.
inline constexpr double kSpeedOfLight = 3.0e8;

inline constexpr double um_to_m(double um) { return um * 1e-6; }
inline constexpr double um_to_nm(double um) { return um * 1e3; }
inline constexpr double nm_to_um(double nm) { return nm * 1e-3; }

/// d2n/dlambda2 from um^-2 to m^-2.
inline constexpr double per_um2_to_per_m2(double v) { return v * 1e12; }

/// 1 s/m^2 = 1e12 ps / (1e9 nm * 1e-3 km) = 1e6 ps/(nm*km).
inline constexpr double s_per_m2_to_ps_per_nm_km(double v) { return v * 1e6; }
inline constexpr double ps_per_nm_km_to_s_per_m2(double v) { return v * 1e-6; }

inline constexpr double ps_to_ns(double ps) { return ps * 1e-3; }

}  // namespace awg::units
