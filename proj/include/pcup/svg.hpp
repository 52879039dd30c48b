#pragma once

#include <string>

#include "pcup/cupcore.hpp"

namespace pcup::svg {

// Upper-diagonal visualization: the interval [a,b] is drawn at the point
// (a,b). Invariants shade constant-value cells, diagrams place labeled dots;
// an extra band above the finite range stands in for infinity.
std::string render(const step_invariant& inv);
std::string render(const cup_diagram& d);

void emit_svg(const step_invariant& inv, const std::string& path);
void emit_svg(const cup_diagram& d, const std::string& path);

}  // namespace pcup::svg
