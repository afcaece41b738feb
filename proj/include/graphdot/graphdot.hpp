#pragma once

// Umbrella header for the graphdot library: exact graph dot products, the
// induced metric and orthogonality structure, coordinates over graph bases,
// and the supporting catalog/canonical-form machinery.

#include "canonical.hpp"
#include "coords.hpp"
#include "cross_order.hpp"
#include "dot.hpp"
#include "error.hpp"
#include "graph.hpp"
#include "graph6.hpp"
#include "parallel.hpp"
#include "rational.hpp"
#include "special.hpp"
#include "spectral.hpp"
