#pragma once

#include "qhj/contour.hpp"
#include "qhj/eigenfunction.hpp"
#include "qhj/grid.hpp"
#include "qhj/orthopoly.hpp"
#include "qhj/poly_ode.hpp"
#include "qhj/polynomial.hpp"
#include "qhj/potentials.hpp"
#include "qhj/quantize.hpp"
#include "qhj/riccati.hpp"
#include "qhj/types.hpp"
#include "qhj/verify.hpp"
