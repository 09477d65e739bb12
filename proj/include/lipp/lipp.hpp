// Umbrella header for the longest-induced-path solver library.
#ifndef LIPP_LIPP_HPP
#define LIPP_LIPP_HPP

#include "cliques.hpp"
#include "generators.hpp"
#include "graph.hpp"
#include "heuristic.hpp"
#include "instance_io.hpp"
#include "lp.hpp"
#include "maxflow.hpp"
#include "model.hpp"
#include "polylab.hpp"
#include "report.hpp"
#include "rng.hpp"
#include "separation.hpp"
#include "solver.hpp"

#endif
