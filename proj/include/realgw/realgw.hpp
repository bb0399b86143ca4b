#pragma once

// Umbrella header.

#include "realgw/errors.hpp"
#include "realgw/json_io.hpp"
#include "realgw/localization.hpp"
#include "realgw/multicover.hpp"
#include "realgw/power_series.hpp"
#include "realgw/rational.hpp"
#include "realgw/sign_calculus.hpp"
#include "realgw/sign_registry.hpp"
#include "realgw/verifier.hpp"
