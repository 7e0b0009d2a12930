#pragma once

#include "stacks/diagram.hpp"
#include "stacks/dlu_path.hpp"

#include <stdexcept>

namespace stacks {

// Reconstruction produced two equal arcs. A path maps to a duplicate arc
// exactly when it contains the Lambda pattern, so this is the diagnosable
// outcome for such inputs — never a silently collapsed arc set.
struct DuplicateArcError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Vertex v with left degree a and right degree b becomes the piece
// D^a L^{d-a-b} U^b; the path has one piece per vertex. Throws
// std::invalid_argument("degree exceeds d") if some vertex is too busy.
DluPath eta(const Diagram &diagram, int d);

// Inverse reconstruction. V1 holds every vertex once per down-step of its
// piece, V2 once per up-step; repeatedly connect the largest remaining
// element i of V2 to the smallest element of V1 larger than i, removing
// both. Requires a closed path that is nonnegative from height 0.
Diagram eta_inv(const DluPath &path);

}  // namespace stacks
