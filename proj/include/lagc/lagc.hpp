#pragma once

#include "lagc/error.hpp"
#include "lagc/syntax.hpp"
#include "lagc/state.hpp"
#include "lagc/eval.hpp"
#include "lagc/trace.hpp"
#include "lagc/concretize.hpp"
#include "lagc/localeval.hpp"
#include "lagc/compose.hpp"
#include "lagc/printer.hpp"
#include "lagc/parser.hpp"
#include "lagc/render.hpp"
