#pragma once

#include "pco/canonical.hpp"
#include "pco/characterize.hpp"
#include "pco/defined.hpp"
#include "pco/enumerate.hpp"
#include "pco/error.hpp"
#include "pco/formula.hpp"
#include "pco/laws.hpp"
#include "pco/model.hpp"
#include "pco/model_io.hpp"
#include "pco/normal_form.hpp"
#include "pco/oracle.hpp"
#include "pco/parser.hpp"
#include "pco/printer.hpp"
#include "pco/random_formula.hpp"
#include "pco/rational.hpp"
#include "pco/rules.hpp"
#include "pco/schemas.hpp"
#include "pco/semantics.hpp"
#include "pco/signature.hpp"
