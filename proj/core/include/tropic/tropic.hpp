#pragma once

#include "tropic/dependence.hpp"
#include "tropic/errors.hpp"
#include "tropic/io.hpp"
#include "tropic/linalg.hpp"
#include "tropic/metric.hpp"
#include "tropic/oracle.hpp"
#include "tropic/rational.hpp"
#include "tropic/report.hpp"
#include "tropic/residual.hpp"
#include "tropic/semifield.hpp"
#include "tropic/solver.hpp"
