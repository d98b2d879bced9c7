#pragma once

#include "ucrga/error.hpp"
#include "ucrga/dense_matrix.hpp"
#include "ucrga/matrix_io.hpp"
#include "ucrga/svd.hpp"
#include "ucrga/balance.hpp"
#include "ucrga/generalized_inverse.hpp"
#include "ucrga/rga.hpp"
#include "ucrga/random.hpp"
#include "ucrga/property_suite.hpp"
