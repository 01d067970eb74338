#pragma once

#include "probgeo/asymptotics.hpp"
#include "probgeo/barycenter.hpp"
#include "probgeo/chart.hpp"
#include "probgeo/distribution.hpp"
#include "probgeo/errors.hpp"
#include "probgeo/moments.hpp"
#include "probgeo/multivariate.hpp"
#include "probgeo/numerics.hpp"
#include "probgeo/quadrature.hpp"
#include "probgeo/rng.hpp"
#include "probgeo/special_functions.hpp"
#include "probgeo/tails.hpp"
