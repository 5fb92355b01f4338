#pragma once

#include "drdp/bb_solver.hpp"
#include "drdp/bench.hpp"
#include "drdp/corpus.hpp"
#include "drdp/formulations.hpp"
#include "drdp/graph.hpp"
#include "drdp/greedy.hpp"
#include "drdp/labeling.hpp"
#include "drdp/lp_format.hpp"
#include "drdp/model.hpp"
#include "drdp/oracle.hpp"
#include "drdp/pipeline.hpp"
#include "drdp/rational.hpp"
#include "drdp/simplex.hpp"
