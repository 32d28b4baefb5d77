#pragma once

#include "realism/types.hpp"
#include "realism/spectrum.hpp"
#include "realism/state.hpp"
#include "realism/entropy.hpp"
#include "realism/bloch.hpp"
#include "realism/channels.hpp"
#include "realism/bounds.hpp"
#include "realism/monitor.hpp"
#include "realism/random.hpp"
#include "realism/experiments.hpp"
#include "realism/validation.hpp"
