#pragma once

#include "pluck/errors.hpp"
#include "pluck/rational.hpp"
#include "pluck/report.hpp"
#include "pluck/root_system.hpp"
#include "pluck/rep_theory.hpp"
#include "pluck/exterior.hpp"
#include "pluck/pluecker.hpp"
#include "pluck/model_checker.hpp"
#include "pluck/sl3_case.hpp"
#include "pluck/commands.hpp"
