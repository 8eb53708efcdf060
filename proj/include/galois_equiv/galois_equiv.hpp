#ifndef GALOIS_EQUIV_GALOIS_EQUIV_HPP
#define GALOIS_EQUIV_GALOIS_EQUIV_HPP

#include "galois_equiv/error.hpp"
#include "galois_equiv/rational.hpp"
#include "galois_equiv/field.hpp"
#include "galois_equiv/number_theory.hpp"
#include "galois_equiv/matrix.hpp"
#include "galois_equiv/linalg.hpp"
#include "galois_equiv/rep.hpp"
#include "galois_equiv/equivariance.hpp"
#include "galois_equiv/induced.hpp"

#endif  // GALOIS_EQUIV_GALOIS_EQUIV_HPP
