#pragma once

#include "abelian.hpp"
#include "builders.hpp"
#include "core.hpp"
#include "explicit_graph.hpp"
#include "export.hpp"
#include "generators.hpp"
#include "graph_ops.hpp"
#include "lattice.hpp"
#include "predicates.hpp"
#include "rotor_config.hpp"
#include "verify.hpp"
#include "walk.hpp"
