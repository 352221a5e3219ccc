#pragma once

#include "shuffle/core.hpp"
#include "shuffle/formulas.hpp"
#include "shuffle/oracle.hpp"
#include "shuffle/treegraph.hpp"
