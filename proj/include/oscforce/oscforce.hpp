#pragma once

#include "oscforce/circuits.hpp"
#include "oscforce/cubic.hpp"
#include "oscforce/errors.hpp"
#include "oscforce/forces.hpp"
#include "oscforce/matsubara.hpp"
#include "oscforce/oscillator.hpp"
#include "oscforce/specfun.hpp"
#include "oscforce/units.hpp"
