#ifndef MOSVA_MOSVA_HPP
#define MOSVA_MOSVA_HPP

/// Everything except the CLI suite runner.

#include "mosva/associativity.hpp"
#include "mosva/fock.hpp"
#include "mosva/geometry/chart.hpp"
#include "mosva/geometry/covariant.hpp"
#include "mosva/geometry/expr.hpp"
#include "mosva/geometry/function.hpp"
#include "mosva/geometry/invariants.hpp"
#include "mosva/geometry/parser.hpp"
#include "mosva/geometry/tensor.hpp"
#include "mosva/geometry/transport.hpp"
#include "mosva/linear_combination.hpp"
#include "mosva/mode_algebra.hpp"
#include "mosva/module_w.hpp"
#include "mosva/rational.hpp"
#include "mosva/scalar.hpp"
#include "mosva/symmetry.hpp"
#include "mosva/vertex_operator.hpp"

#endif  // MOSVA_MOSVA_HPP
