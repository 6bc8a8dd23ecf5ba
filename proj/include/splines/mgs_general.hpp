#pragma once

// Minimum generating sets for graphs with one or two distinct edge labels,
// and the per-component dispatcher.

#include "splines/spline.hpp"

namespace splines {

/// {1} plus an indicator spline for every non-first vertex in connectivity
/// order. Connected graph with at most one distinct label.
GeneratingSet mgs_one_label(const GraphPtr& g);

/// The two-label construction: for each vertex v_i after the first, with
/// v_j its earliest lower neighbor and k the label of v_i v_j, the
/// generator is k on the k-deleted component of v_i when that component
/// lies entirely at or after v_i, and lcm of the two labels at v_i alone
/// otherwise. Connected graph with exactly two distinct labels.
GeneratingSet mgs_two_labels(const GraphPtr& g);

/// Route every connected component to the matching construction and
/// assemble the direct sum. Throws UnsupportedInput for components with
/// three or more labels that are not cycles with squared linear form labels.
GeneratingSet mgs_dispatch(const GraphPtr& g);

}  // namespace splines
