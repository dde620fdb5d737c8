#pragma once

#include "spinphase/amplitudes.hpp"
#include "spinphase/convention.hpp"
#include "spinphase/direction.hpp"
#include "spinphase/errors.hpp"
#include "spinphase/json_io.hpp"
#include "spinphase/linalg.hpp"
#include "spinphase/observable.hpp"
#include "spinphase/operators.hpp"
#include "spinphase/paper_tables.hpp"
#include "spinphase/reductions.hpp"
#include "spinphase/rng.hpp"
#include "spinphase/simulate.hpp"
#include "spinphase/verify.hpp"
