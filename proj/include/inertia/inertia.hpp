#pragma once

// Umbrella header: the whole library.

#include "inertia/equilibria.hpp"
#include "inertia/error.hpp"
#include "inertia/fuzz.hpp"
#include "inertia/game.hpp"
#include "inertia/interventions.hpp"
#include "inertia/io.hpp"
#include "inertia/linear.hpp"
#include "inertia/presets.hpp"
#include "inertia/random.hpp"
#include "inertia/rational.hpp"
#include "inertia/report.hpp"
#include "inertia/selection.hpp"
#include "inertia/synthesis.hpp"
