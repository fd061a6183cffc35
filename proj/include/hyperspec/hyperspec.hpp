#pragma once

// Umbrella header: spectral analysis of k-uniform hypergraphs via largest
// H-eigenvalues of their adjacency, Laplacian and signless Laplacian
// tensors, power and generalized-power constructions, and the numeric
// verification harness built on top of them.

#include "hyperspec/hypergraph.hpp"
#include "hyperspec/power.hpp"
#include "hyperspec/odd_bipartite.hpp"
#include "hyperspec/regular_supergraph.hpp"
#include "hyperspec/vec.hpp"
#include "hyperspec/tensor.hpp"
#include "hyperspec/solver.hpp"
#include "hyperspec/sunflower_roots.hpp"
#include "hyperspec/lift.hpp"
#include "hyperspec/certificate.hpp"
#include "hyperspec/verify.hpp"
