#pragma once

// Umbrella header.

#include "qmock/catalog.hpp"
#include "qmock/error.hpp"
#include "qmock/eval.hpp"
#include "qmock/expr.hpp"
#include "qmock/field.hpp"
#include "qmock/hypergeom.hpp"
#include "qmock/mock.hpp"
#include "qmock/oracles.hpp"
#include "qmock/products.hpp"
#include "qmock/registry.hpp"
#include "qmock/series.hpp"
#include "qmock/verify.hpp"
