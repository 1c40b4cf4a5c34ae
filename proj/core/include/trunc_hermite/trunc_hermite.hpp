#pragma once

#include "trunc_hermite/errors.hpp"
#include "trunc_hermite/io.hpp"
#include "trunc_hermite/moments.hpp"
#include "trunc_hermite/polynomials.hpp"
#include "trunc_hermite/precision.hpp"
#include "trunc_hermite/quadrature.hpp"
#include "trunc_hermite/real.hpp"
#include "trunc_hermite/recurrence.hpp"
#include "trunc_hermite/special_functions.hpp"
#include "trunc_hermite/stieltjes.hpp"
