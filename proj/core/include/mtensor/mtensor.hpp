#pragma once

#include "mtensor/deblur.hpp"
#include "mtensor/error.hpp"
#include "mtensor/io.hpp"
#include "mtensor/lstsq.hpp"
#include "mtensor/random.hpp"
#include "mtensor/reference_problem.hpp"
#include "mtensor/solver.hpp"
#include "mtensor/splitting.hpp"
#include "mtensor/tensor3.hpp"
#include "mtensor/tensor_ops.hpp"
#include "mtensor/transform.hpp"
