#ifndef PATGF_PATGF_HPP
#define PATGF_PATGF_HPP

#include "patgf/catalog.hpp"
#include "patgf/census.hpp"
#include "patgf/chebyshev.hpp"
#include "patgf/decomposition.hpp"
#include "patgf/engine.hpp"
#include "patgf/errors.hpp"
#include "patgf/inclusion_exclusion.hpp"
#include "patgf/permutation.hpp"
#include "patgf/polynomial.hpp"
#include "patgf/rational_function.hpp"

#endif  // PATGF_PATGF_HPP
