#pragma once

#include "positroid/error.hpp"
#include "positroid/rational.hpp"
#include "positroid/pattern.hpp"
#include "positroid/pattern_io.hpp"
#include "positroid/polynomial.hpp"
#include "positroid/order.hpp"
#include "positroid/polynomial_io.hpp"
#include "positroid/groebner.hpp"
#include "positroid/linalg.hpp"
#include "positroid/ideal.hpp"
#include "positroid/hilbert.hpp"
#include "positroid/ideal_factory.hpp"
#include "positroid/fiber.hpp"
#include "positroid/fiber_io.hpp"
#include "positroid/k1_basis.hpp"
#include "positroid/verifier.hpp"
