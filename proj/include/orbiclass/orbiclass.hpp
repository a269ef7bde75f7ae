#pragma once

// Umbrella header for the whole library.

#include "orbiclass/classify.hpp"
#include "orbiclass/datum.hpp"
#include "orbiclass/invariants.hpp"
#include "orbiclass/json_io.hpp"
#include "orbiclass/moves.hpp"
#include "orbiclass/zmod.hpp"
