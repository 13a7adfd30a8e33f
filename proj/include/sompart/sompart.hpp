#pragma once

#include "sompart/bench.hpp"
#include "sompart/core.hpp"
#include "sompart/heap_solver.hpp"
#include "sompart/linear_solver.hpp"
#include "sompart/multi_agent.hpp"
#include "sompart/oracle.hpp"
#include "sompart/reduction.hpp"
#include "sompart/tree.hpp"
#include "sompart/tree_instance.hpp"
