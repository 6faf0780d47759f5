#pragma once

#include "rational.hpp"
#include "shape.hpp"
#include "mpoly.hpp"
#include "matrix.hpp"
#include "gl.hpp"
#include "perm.hpp"
#include "chart.hpp"
#include "poisson.hpp"
#include "sampling.hpp"
#include "strata.hpp"
#include "io.hpp"
#include "cli.hpp"
