#pragma once

#include "tassel/arrays.hpp"
#include "tassel/bits.hpp"
#include "tassel/check.hpp"
#include "tassel/flow.hpp"
#include "tassel/graph.hpp"
#include "tassel/induced.hpp"
#include "tassel/io.hpp"
#include "tassel/lang.hpp"
#include "tassel/obstructions.hpp"
#include "tassel/probes.hpp"
#include "tassel/rng.hpp"
#include "tassel/topology.hpp"
#include "tassel/treewidth.hpp"
#include "tassel/vertex_set.hpp"
