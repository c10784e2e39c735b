#pragma once

#include "eccidx/distance.hpp"
#include "eccidx/edge_list.hpp"
#include "eccidx/enumerate.hpp"
#include "eccidx/families.hpp"
#include "eccidx/family_spec.hpp"
#include "eccidx/graph.hpp"
#include "eccidx/graph6.hpp"
#include "eccidx/invariants.hpp"
#include "eccidx/rational.hpp"
#include "eccidx/theorems.hpp"
#include "eccidx/ud.hpp"
