#pragma once

#include "rational.hpp"
#include "poly.hpp"
#include "ratfunc.hpp"
#include "series.hpp"
#include "classical.hpp"
#include "graded.hpp"
#include "gen_eulerian.hpp"
#include "padic.hpp"
#include "audit.hpp"
#include "bfile.hpp"
#include "report.hpp"
