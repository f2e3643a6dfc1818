#pragma once

#include "salemforge/construct.hpp"
#include "salemforge/error.hpp"
#include "salemforge/interlace.hpp"
#include "salemforge/limit_spec.hpp"
#include "salemforge/poly.hpp"
#include "salemforge/polyio.hpp"
#include "salemforge/rational_function.hpp"
#include "salemforge/rootloc.hpp"
#include "salemforge/sequences.hpp"
