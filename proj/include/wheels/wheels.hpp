#pragma once

#include "wheels/bitset.hpp"
#include "wheels/cnf.hpp"
#include "wheels/detectors.hpp"
#include "wheels/enumeration.hpp"
#include "wheels/fast_wheel.hpp"
#include "wheels/graph.hpp"
#include "wheels/graph_io.hpp"
#include "wheels/induced_paths.hpp"
#include "wheels/reduction.hpp"
#include "wheels/report.hpp"
#include "wheels/witness.hpp"
