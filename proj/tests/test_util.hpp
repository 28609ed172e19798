#pragma once

#include <cmath>
#include <stdexcept>

#include <doctest.h>

// Absolute-tolerance comparison; doctest's Approx is relative-only.
#define CHECK_NEAR(a, b, tol) CHECK(std::abs((a) - (b)) <= (tol))
