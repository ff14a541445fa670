// sepgeo.hpp — umbrella header

#pragma once

#include "sepgeo/errors.hpp"
#include "sepgeo/geometry.hpp"
#include "sepgeo/io.hpp"
#include "sepgeo/linalg.hpp"
#include "sepgeo/measurement.hpp"
#include "sepgeo/separability.hpp"
#include "sepgeo/states.hpp"
