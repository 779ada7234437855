// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "ratsat/cnf.hpp"
#include "ratsat/error.hpp"
#include "ratsat/fptas.hpp"
#include "ratsat/gadgets.hpp"
#include "ratsat/instance.hpp"
#include "ratsat/primes.hpp"
#include "ratsat/rational.hpp"
#include "ratsat/reduction.hpp"
#include "ratsat/solvers.hpp"
