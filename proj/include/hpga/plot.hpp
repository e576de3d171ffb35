#pragma once
#include <ostream>

#include "hpga/motions.hpp"

namespace hpga {

// Deterministic trajectory writers. CSV columns are t,x,y[,z],weight with a
// mandatory header row and 17-significant-digit floats; SVG draws the Klein
// disk (unit circle dashed) with the orbit polyline, H2 only.
void write_trajectory_csv(const Trajectory& tr, std::ostream& os);
void write_trajectory_json(const Trajectory& tr, std::ostream& os);
void write_trajectory_svg(const Trajectory& tr, std::ostream& os);

}  // namespace hpga
