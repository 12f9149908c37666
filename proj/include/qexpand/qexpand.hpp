#ifndef QEXPAND_QEXPAND_HPP
#define QEXPAND_QEXPAND_HPP

#include "complex.hpp"
#include "complex_series.hpp"
#include "cyclotomic.hpp"
#include "errors.hpp"
#include "exact_coeffs.hpp"
#include "float_coeffs.hpp"
#include "laurent.hpp"
#include "number_tables.hpp"
#include "rational.hpp"
#include "real.hpp"
#include "saddle.hpp"
#include "special.hpp"

#endif
