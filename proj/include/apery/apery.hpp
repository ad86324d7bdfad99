#pragma once

#include "apery/clausen.hpp"
#include "apery/expr.hpp"
#include "apery/identities.hpp"
#include "apery/io.hpp"
#include "apery/precision.hpp"
#include "apery/pslq.hpp"
#include "apery/sequences.hpp"
#include "apery/series.hpp"
#include "apery/types.hpp"
#include "apery/zeta.hpp"
