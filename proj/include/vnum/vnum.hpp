#pragma once

#include "error.hpp"
#include "exponent_vector.hpp"
#include "monomial_ideal.hpp"
#include "io.hpp"
#include "json_io.hpp"
#include "primary_decomposition.hpp"
#include "vnumber.hpp"
#include "exact_lp.hpp"
#include "newton.hpp"
#include "filtration.hpp"
#include "integer_program.hpp"
#include "experiments.hpp"
#include "report_json.hpp"
