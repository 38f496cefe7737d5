#pragma once

#include <string>
#include <vector>

#include "kschur/abc.hpp"
#include "kschur/core.hpp"

namespace kschur {

// Fixed-width text grids, top row first (paper layout). Inner/skipped cells
// render as '.'; cells of ribbons of size >= 2 carry a trailing '~' bar.

std::string render_shape(const Partition& p);
std::string render_residues(const Core& c);
std::string render_tableau(const std::vector<std::vector<int>>& rows);
std::string render_abc(const Abc& a);

}  // namespace kschur
