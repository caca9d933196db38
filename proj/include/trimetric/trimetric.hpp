#pragma once

#include "trimetric/distance.hpp"
#include "trimetric/domination.hpp"
#include "trimetric/enumerate.hpp"
#include "trimetric/error.hpp"
#include "trimetric/families.hpp"
#include "trimetric/graph.hpp"
#include "trimetric/graph6.hpp"
#include "trimetric/metrics.hpp"
#include "trimetric/scan.hpp"
#include "trimetric/theorems.hpp"
#include "trimetric/triameter.hpp"
