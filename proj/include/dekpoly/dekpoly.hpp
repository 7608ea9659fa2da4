#pragma once

// Umbrella header: the full construction pipeline in dependency order.

#include "errors.hpp"
#include "rational.hpp"
#include "bigfloat.hpp"
#include "quadext.hpp"
#include "complexof.hpp"
#include "scalar_traits.hpp"
#include "polynomial.hpp"
#include "poly_gcd.hpp"
#include "classical.hpp"
#include "moments.hpp"
#include "dekcore.hpp"
#include "christoffel.hpp"
#include "banded.hpp"
#include "darboux.hpp"
#include "zeros.hpp"
#include "serialization.hpp"
