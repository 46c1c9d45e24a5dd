#pragma once

#include "magiccover/constructions.hpp"
#include "magiccover/dot.hpp"
#include "magiccover/error.hpp"
#include "magiccover/families.hpp"
#include "magiccover/family_spec.hpp"
#include "magiccover/graph.hpp"
#include "magiccover/isocover.hpp"
#include "magiccover/json_io.hpp"
#include "magiccover/search.hpp"
#include "magiccover/verifier.hpp"
