#pragma once

#include <string>
#include <vector>

#include "latpoly/chord.hpp"
#include "latpoly/polytope.hpp"
#include "latpoly/transform.hpp"

namespace latpoly {

struct RenderSpec {
    int scale = 40;  // pixels per lattice unit
    bool show_labels = true;
    bool show_mirror = false;
    bool division_labels = true;
};

// Filled circles mark initial points, X marks terminal points.
std::string render_presentation(const LatticePresentation& d, const RenderSpec& spec,
                                const LatticePresentation* target = nullptr);
std::string render_polytope(const LatticePolytope& p, const RenderSpec& spec);
// numbered shaded rectangles over the polytope spanned by the declared states
std::string render_sequence(const TransformationSequence& s, const RenderSpec& spec);
std::string render_division(const LatticePolytope& q, const Division& d, const RenderSpec& spec);

}  // namespace latpoly
