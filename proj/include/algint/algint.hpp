#pragma once

#include "algebra.hpp"
#include "error.hpp"
#include "expr.hpp"
#include "format.hpp"
#include "interval.hpp"
#include "linalg.hpp"
#include "literal.hpp"
#include "minkowski.hpp"
#include "optimize.hpp"
