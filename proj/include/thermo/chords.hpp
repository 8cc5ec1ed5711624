#pragma once

#include "thermo/models.hpp"

#include <cstddef>
#include <vector>

namespace thermo {

inline constexpr double kTrivialChordLength = 1e-10;

/// Reeb chord: a vertical segment over the common (p, q) from z_start on the
/// initial Legendrian to z_end on the terminal one.
struct Chord {
    double q = 0.0;
    double p = 0.0;
    double z_start = 0.0;
    double z_end = 0.0;
    double length = 0.0;
    int direction = 1;        // sign(z_end - z_start)
    bool tangential = false;  // double root of the front-difference derivative
};

/// Fills length and direction from the endpoints.
Chord make_chord(double q, double p, double z_start, double z_end);

/// Chord between Lambda(T0, 0) and Lambda(T1, c) of the gas:
/// v = (T1 - T0)/c, P0 = c T0/(T1 - T0), z from T0 ln v to T1 ln v.
/// Throws DomainError when v = 1 (zero length).
Chord gas_chord(double T0, double T1, double c);

/// Chord between Lambda(T0, 0) and Lambda(T1, c) of the Curie-Weiss magnet:
/// p = tanh(c/(T1 - T0)), q = c T0/(T1 - T0) - b p.
Chord cw_chord(double T0, double T1, double c, double b);

struct ChordSearchOptions {
    std::size_t grid_nodes = 10000;
    double tol = 1e-10;  // |f1' - f0'| at an accepted root
    double trivial_length = kTrivialChordLength;
};

/// Chords between two graphical Legendrians over a common chart: critical
/// points of psi = f1 - f0 on [lo, hi]. Sign changes of psi' are bisected;
/// grid points where |psi'| has a local minimum without a sign change are
/// refined and kept as tangential chords when |psi'| < tol. Roots with
/// |psi| below the triviality threshold are intersections, not chords.
/// Throws DomainError when psi' vanishes on the whole grid.
std::vector<Chord> find_chords(const FrontFunction& f0, const FrontFunction& f1, double lo,
                               double hi, const ChordSearchOptions& opt = {});

}  // namespace thermo
