#ifndef NCSYLV_NCSYLV_HPP
#define NCSYLV_NCSYLV_HPP

#include "coeff.hpp"
#include "element.hpp"
#include "linalg.hpp"
#include "matrix.hpp"
#include "parallel.hpp"
#include "paths.hpp"
#include "relations.hpp"
#include "report.hpp"
#include "sylvester.hpp"
#include "weights.hpp"
#include "word.hpp"

#endif  // NCSYLV_NCSYLV_HPP
