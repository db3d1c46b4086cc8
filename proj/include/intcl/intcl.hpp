#pragma once

#include "intcl/closure.hpp"
#include "intcl/errors.hpp"
#include "intcl/groebner.hpp"
#include "intcl/ideal.hpp"
#include "intcl/lp.hpp"
#include "intcl/matrix.hpp"
#include "intcl/monomial.hpp"
#include "intcl/monomial_closure.hpp"
#include "intcl/parse.hpp"
#include "intcl/poly_ring.hpp"
#include "intcl/polynomial.hpp"
#include "intcl/rees.hpp"
#include "intcl/ring.hpp"
