#pragma once

#include "graceful/graph.hpp"
#include "graceful/sequences.hpp"
#include "graceful/coloring.hpp"
#include "graceful/solvers.hpp"
#include "graceful/reductions.hpp"
#include "graceful/cnf.hpp"
