#pragma once

#include "lrd/config.hpp"
#include "lrd/decomposition.hpp"
#include "lrd/error.hpp"
#include "lrd/io.hpp"
#include "lrd/jackknife.hpp"
#include "lrd/kernels.hpp"
#include "lrd/linear_fit.hpp"
#include "lrd/measures.hpp"
#include "lrd/report.hpp"
#include "lrd/series.hpp"
#include "lrd/synth.hpp"
