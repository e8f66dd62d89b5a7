#pragma once

#include "equichord/bigrat.hpp"
#include "equichord/crosscheck.hpp"
#include "equichord/dynamics.hpp"
#include "equichord/errors.hpp"
#include "equichord/io.hpp"
#include "equichord/poly.hpp"
#include "equichord/poly_gcd.hpp"
#include "equichord/quadratic_extension.hpp"
#include "equichord/rational_function.hpp"
#include "equichord/refutation.hpp"
#include "equichord/series.hpp"
#include "equichord/series_solver.hpp"
#include "equichord/sturm.hpp"
#include "equichord/symmetry.hpp"
