#pragma once

#include "sphcurve/error.hpp"
#include "sphcurve/gauss_word.hpp"
#include "sphcurve/plane_curve.hpp"
#include "sphcurve/splice.hpp"
#include "sphcurve/analytics.hpp"
#include "sphcurve/parallel.hpp"
#include "sphcurve/enumeration.hpp"
#include "sphcurve/reductivity.hpp"
#include "sphcurve/calibration.hpp"
#include "sphcurve/discharge.hpp"
#include "sphcurve/render.hpp"
