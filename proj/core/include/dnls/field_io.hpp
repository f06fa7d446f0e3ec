#pragma once

#include <iosfwd>
#include <string>

#include "dnls/spectral_field.hpp"
#include "dnls/trajectory.hpp"

namespace dnls::io {

// Text format: one JSON header line, then CSV.
//   {"kind":"field","cutoff":N}
//   xi,re,im
// or
//   {"kind":"trajectory","cutoff":N,"half_width":T,"steps":M,"profile":{...}}
//   k,xi,re,im
void write_field(std::ostream& os, const SpectralField& f);
SpectralField read_field(std::istream& is);
void write_trajectory(std::ostream& os, const Trajectory& traj);
Trajectory read_trajectory(std::istream& is);

void save_field(const std::string& path, const SpectralField& f);
SpectralField load_field(const std::string& path);
void save_trajectory(const std::string& path, const Trajectory& traj);
Trajectory load_trajectory(const std::string& path);

// "field" or "trajectory", from the header line.
std::string peek_kind(const std::string& path);

}  // namespace dnls::io
