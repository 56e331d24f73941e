#pragma once

#include "bigcount.hpp"
#include "canonical.hpp"
#include "census.hpp"
#include "counting.hpp"
#include "cycle_claims.hpp"
#include "error.hpp"
#include "families.hpp"
#include "graph.hpp"
#include "graph6.hpp"
#include "sequences.hpp"
#include "witnessing.hpp"
