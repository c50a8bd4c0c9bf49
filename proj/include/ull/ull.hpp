#pragma once

#include "ull/checker.hpp"
#include "ull/environment.hpp"
#include "ull/eta.hpp"
#include "ull/evaluator.hpp"
#include "ull/formula.hpp"
#include "ull/nnf.hpp"
#include "ull/oracle.hpp"
#include "ull/parser.hpp"
#include "ull/proof_parser.hpp"
#include "ull/random.hpp"
#include "ull/sequent.hpp"
#include "ull/suites.hpp"
#include "ull/truth_value.hpp"
