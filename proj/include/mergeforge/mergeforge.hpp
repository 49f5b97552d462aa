#pragma once

// Convenience umbrella: pulls in the whole library.

#include "audit.hpp"
#include "base.hpp"
#include "core.hpp"
#include "formula.hpp"
#include "golden.hpp"
#include "manipulation.hpp"
#include "metric.hpp"
#include "model_merge.hpp"
#include "ocf.hpp"
#include "operators.hpp"
#include "parse.hpp"
#include "satisfaction.hpp"
#include "strategy.hpp"
#include "syntax_merge.hpp"
