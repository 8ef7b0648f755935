#pragma once

#include "relax/errors.hpp"
#include "relax/graph.hpp"
#include "relax/io.hpp"
#include "relax/rational.hpp"
#include "relax/records.hpp"
#include "relax/reductions.hpp"
#include "relax/solvers.hpp"
#include "relax/verify.hpp"
