#pragma once

// Umbrella header: Mobius-inversion coefficient extraction from samples, the
// supporting number theory, and the brute-force oracles.

#include "aft/aft_analytic.hpp"
#include "aft/aft_periodic.hpp"
#include "aft/boundary.hpp"
#include "aft/inversion.hpp"
#include "aft/muregular.hpp"
#include "aft/numtheory.hpp"
#include "aft/opcount.hpp"
#include "aft/oracle.hpp"
#include "aft/sigproc.hpp"
#include "aft/signal.hpp"
#include "aft/stepfn.hpp"
#include "aft/summation.hpp"
