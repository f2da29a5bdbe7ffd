// Umbrella header.

#pragma once

#include "pidiv/bounds.hpp"
#include "pidiv/certified.hpp"
#include "pidiv/errors.hpp"
#include "pidiv/interval_solver.hpp"
#include "pidiv/pi_engine.hpp"
#include "pidiv/predicates.hpp"
#include "pidiv/sequences.hpp"
#include "pidiv/serialize.hpp"
#include "pidiv/sieve.hpp"
