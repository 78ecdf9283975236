#pragma once

#include "fracgeo/core.hpp"
#include "fracgeo/random.hpp"
#include "fracgeo/sphere_rule.hpp"
#include "fracgeo/bodies.hpp"
#include "fracgeo/quadrature.hpp"
#include "fracgeo/fracperim.hpp"
#include "fracgeo/measures.hpp"
#include "fracgeo/limits.hpp"
#include "fracgeo/minkowski.hpp"
#include "fracgeo/io.hpp"
#include "fracgeo/presets.hpp"
