#pragma once

#include "harmonium/collision.hpp"
#include "harmonium/entropy.hpp"
#include "harmonium/errors.hpp"
#include "harmonium/figure_series.hpp"
#include "harmonium/hermite.hpp"
#include "harmonium/model.hpp"
#include "harmonium/observables.hpp"
#include "harmonium/one_matrix.hpp"
#include "harmonium/run.hpp"
#include "harmonium/scale_dynamics.hpp"
#include "harmonium/spectral.hpp"
#include "harmonium/version.hpp"
