#pragma once

#include <liquidation/io.hpp>
#include <liquidation/noise.hpp>
#include <liquidation/objective.hpp>
#include <liquidation/parallel.hpp>
#include <liquidation/params.hpp>
#include <liquidation/policy.hpp>
#include <liquidation/rng.hpp>
#include <liquidation/scenario.hpp>
#include <liquidation/simulate.hpp>
#include <liquidation/verify.hpp>
