#pragma once

#include "opuc_chains/errors.hpp"
#include "opuc_chains/scalar.hpp"
#include "opuc_chains/poly.hpp"
#include "opuc_chains/roots.hpp"
#include "opuc_chains/verblunsky.hpp"
#include "opuc_chains/moments.hpp"
#include "opuc_chains/chains.hpp"
#include "opuc_chains/opuc.hpp"
#include "opuc_chains/bridge.hpp"
#include "opuc_chains/perturb.hpp"
#include "opuc_chains/ppcfrac.hpp"
#include "opuc_chains/hypergeometric.hpp"
#include "opuc_chains/families.hpp"
