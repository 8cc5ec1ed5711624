#pragma once

#include "thermo/chords.hpp"
#include "thermo/microstate.hpp"
#include "thermo/phase_space.hpp"
#include "thermo/processes.hpp"

#include <nlohmann/json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace thermo::io {

using nlohmann::json;

/// Round-trippable decimal form (17 significant digits).
std::string fmt(double x);

void write_path_csv(std::ostream& os, const ExtendedPath& path);
void write_path_csv(std::ostream& os, const ReducedPath& path);

/// Parses `t,z,S,T,p_1..p_n,q_1..q_n`.
ExtendedPath read_extended_path_csv(std::istream& is);
/// Parses `t,z,p_1..p_k,q_1..q_k`.
ReducedPath read_reduced_path_csv(std::istream& is);

json to_json(const NonnegReport& r);
json to_json(const Chord& c);
json to_json(const std::vector<Chord>& chords);
json to_json(const ReducedPoint& pt);

void write_chords_csv(std::ostream& os, const std::vector<Chord>& chords);

struct System {
    MicrostateSpace space;
    AffineHamiltonian hamiltonian;
};

/// `{"labels":[...],"weights":[...],"v_int":[...],"v_bar":[[...]]}`; v_bar holds
/// n rows of length m. Unknown keys are rejected.
System system_from_json(const json& j);
System load_system(const std::string& file);

/// One density per row, comma separated.
std::vector<Density> read_densities_csv(std::istream& is);
void write_densities_csv(std::ostream& os, const std::vector<Density>& ds);

void write_text_file(const std::string& file, const std::string& content);
std::string read_text_file(const std::string& file);

}  // namespace thermo::io
