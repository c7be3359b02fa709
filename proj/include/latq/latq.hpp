#pragma once

#include "latq/birkhoff.hpp"
#include "latq/boolean.hpp"
#include "latq/errors.hpp"
#include "latq/inequality.hpp"
#include "latq/io.hpp"
#include "latq/lattice.hpp"
#include "latq/polynomial.hpp"
#include "latq/prng.hpp"
#include "latq/rational.hpp"
#include "latq/reduction.hpp"
#include "latq/search.hpp"
#include "latq/verdict.hpp"
#include "latq/weights.hpp"
