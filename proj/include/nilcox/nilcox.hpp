#pragma once

#include "nilcox/affine_perm.hpp"
#include "nilcox/checked.hpp"
#include "nilcox/fomin_stanley.hpp"
#include "nilcox/nilcoxeter.hpp"
#include "nilcox/opspec.hpp"
#include "nilcox/partition.hpp"
#include "nilcox/pieri_ops.hpp"
#include "nilcox/serialize.hpp"
#include "nilcox/strip_graphs.hpp"
#include "nilcox/symfunc.hpp"
