#pragma once

#include "kgonal/admissibility.hpp"
#include "kgonal/brute_force.hpp"
#include "kgonal/census.hpp"
#include "kgonal/chain.hpp"
#include "kgonal/error.hpp"
#include "kgonal/estimates.hpp"
#include "kgonal/tableau.hpp"
