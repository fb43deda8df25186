#pragma once

#include "widthlab/bodies.hpp"
#include "widthlab/distribution.hpp"
#include "widthlab/g_tables.hpp"
#include "widthlab/integrate.hpp"
#include "widthlab/io.hpp"
#include "widthlab/monte_carlo.hpp"
#include "widthlab/parallel.hpp"
#include "widthlab/polytope.hpp"
#include "widthlab/quadrature.hpp"
#include "widthlab/rng.hpp"
#include "widthlab/tetra_analytic.hpp"
#include "widthlab/vec.hpp"
#include "widthlab/verify.hpp"
