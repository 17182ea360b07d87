// Everything in one include.
#pragma once

#include "cli.hpp"
#include "diagnostics.hpp"
#include "dmf.hpp"
#include "formula.hpp"
#include "generation.hpp"
#include "ideals.hpp"
#include "json_io.hpp"
#include "kleene.hpp"
#include "lattice.hpp"
#include "partial_set.hpp"
#include "partial_valuation.hpp"
#include "prob_sentences.hpp"
#include "rational.hpp"
#include "report.hpp"
#include "translate.hpp"
