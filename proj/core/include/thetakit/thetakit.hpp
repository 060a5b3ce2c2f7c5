#pragma once

#include "thetakit/curve.hpp"
#include "thetakit/curve_models.hpp"
#include "thetakit/error.hpp"
#include "thetakit/expr.hpp"
#include "thetakit/jet.hpp"
#include "thetakit/numerics.hpp"
#include "thetakit/render.hpp"
#include "thetakit/segment.hpp"
#include "thetakit/surface.hpp"
#include "thetakit/synthesis.hpp"
#include "thetakit/vec.hpp"
