#pragma once

#include "bdd.hpp"
#include "boolfn.hpp"
#include "minimizer.hpp"
#include "ordering.hpp"
#include "pipeline.hpp"
#include "pla.hpp"
#include "qm.hpp"
#include "report.hpp"
