#pragma once

#include "polyeig/aberth.hpp"
#include "polyeig/bench.hpp"
#include "polyeig/errors.hpp"
#include "polyeig/init.hpp"
#include "polyeig/kernels.hpp"
#include "polyeig/matpoly.hpp"
#include "polyeig/oracle.hpp"
#include "polyeig/pellet.hpp"
#include "polyeig/polyfile.hpp"
#include "polyeig/tropical.hpp"
