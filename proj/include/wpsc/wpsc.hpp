#pragma once

// Umbrella header: randomized wet-paper syndrome coding, end to end.

#include "analysis.hpp"
#include "code.hpp"
#include "errors.hpp"
#include "field.hpp"
#include "io.hpp"
#include "rng.hpp"
#include "vecmat.hpp"
#include "wpc.hpp"
#include "zzw.hpp"
