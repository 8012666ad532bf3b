#pragma once
// Umbrella header.

#include "pifrac/circuits.hpp"
#include "pifrac/comb.hpp"
#include "pifrac/core.hpp"
#include "pifrac/extract.hpp"
#include "pifrac/frac.hpp"
#include "pifrac/pointed.hpp"
#include "pifrac/syntax.hpp"
