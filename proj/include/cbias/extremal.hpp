#pragma once

#include "cbias/colouring.hpp"

namespace cbias {

/**
 * Hub construction on n vertices with r colours, 2r | n.
 *
 * Vertices are split into contiguous blocks V1, ..., V(r-1) of size n/2r
 * followed by the hub Vr of size (r+1)n/2r. Edges are all pairs meeting the
 * hub; edges between Vi and the hub get colour i-1, edges inside the hub get
 * colour r-1. Minimum degree is exactly (1/2 + 1/2r) n and every Hamilton
 * cycle has n/r edges of each colour.
 */
ColouredGraph build_layered(int r, int n);

/// Index of the block holding `v` in build_layered(r, n): 0..r-1, r-1 being the hub.
int layered_part(int r, int n, Vertex v);

/**
 * Complete 3-partite graph on n vertices, 3 | n, with contiguous parts
 * V1, V2, V3. V1-V2 edges get colour 0, V2-V3 colour 1 and V3-V1 colour 2,
 * so each vertex sees exactly two colours and every Hamilton cycle has n/3
 * edges of each.
 */
ColouredGraph build_turan3(int n);

} // namespace cbias
