#pragma once

// Umbrella header for the ordered-homomorphism library.

#include "ordhom/brute_force.hpp"
#include "ordhom/chi.hpp"
#include "ordhom/clique_lists.hpp"
#include "ordhom/constraints.hpp"
#include "ordhom/decomposition.hpp"
#include "ordhom/dispatch.hpp"
#include "ordhom/dp.hpp"
#include "ordhom/enumerate.hpp"
#include "ordhom/generate.hpp"
#include "ordhom/mapping.hpp"
#include "ordhom/mis.hpp"
#include "ordhom/ordered_graph.hpp"
#include "ordhom/pathwidth.hpp"
#include "ordhom/reductions.hpp"
#include "ordhom/rng.hpp"
#include "ordhom/shifted.hpp"
#include "ordhom/solve_result.hpp"
#include "ordhom/structure.hpp"
#include "ordhom/text_io.hpp"
