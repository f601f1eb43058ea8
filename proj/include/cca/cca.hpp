#ifndef CCA_CCA_HPP
#define CCA_CCA_HPP

// Umbrella header: the whole library except the CLI front end.

#include "cca/annihilator.hpp"
#include "cca/betti.hpp"
#include "cca/errors.hpp"
#include "cca/field.hpp"
#include "cca/gin.hpp"
#include "cca/groebner.hpp"
#include "cca/hilbert.hpp"
#include "cca/ideal_io.hpp"
#include "cca/linalg.hpp"
#include "cca/monomial.hpp"
#include "cca/monomial_ideal.hpp"
#include "cca/order.hpp"
#include "cca/polynomial.hpp"
#include "cca/pommaret.hpp"
#include "cca/reduction.hpp"

#endif
