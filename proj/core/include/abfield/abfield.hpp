#pragma once

#include "abfield/circulation.hpp"
#include "abfield/constants.hpp"
#include "abfield/dynamics.hpp"
#include "abfield/errors.hpp"
#include "abfield/geometry.hpp"
#include "abfield/io.hpp"
#include "abfield/modes.hpp"
#include "abfield/numerics.hpp"
#include "abfield/projector.hpp"
#include "abfield/screening.hpp"
#include "abfield/sources.hpp"
#include "abfield/stokes.hpp"
#include "abfield/vec3.hpp"
