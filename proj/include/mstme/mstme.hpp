#pragma once

#include "mstme/cli.hpp"
#include "mstme/delaunay.hpp"
#include "mstme/entropy.hpp"
#include "mstme/point_set.hpp"
#include "mstme/rng.hpp"
#include "mstme/solver.hpp"
#include "mstme/spanning_forest.hpp"
#include "mstme/stability.hpp"
#include "mstme/union_find.hpp"
