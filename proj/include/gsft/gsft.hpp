#pragma once

// Umbrella header: exact computation with shifts of finite type carrying a
// free finite-group symmetry, presented by matrices over the integral group
// ring.

#include "gsft/charpoly.hpp"
#include "gsft/equivalence.hpp"
#include "gsft/extension.hpp"
#include "gsft/flow.hpp"
#include "gsft/group.hpp"
#include "gsft/group_ring.hpp"
#include "gsft/group_ring_matrix.hpp"
#include "gsft/inertness.hpp"
#include "gsft/json_io.hpp"
#include "gsft/label.hpp"
#include "gsft/matrix.hpp"
#include "gsft/periodic.hpp"
#include "gsft/polynomial.hpp"
#include "gsft/structure.hpp"
