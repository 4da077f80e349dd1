#pragma once

#include "copnum/error.hpp"
#include "copnum/abelian.hpp"
#include "copnum/cayley.hpp"
#include "copnum/accounting.hpp"
#include "copnum/bounds.hpp"
#include "copnum/constructions.hpp"
#include "copnum/solver.hpp"
#include "copnum/strategy.hpp"
