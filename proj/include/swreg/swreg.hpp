#pragma once

#include "swreg/core.hpp"
#include "swreg/geometry.hpp"
#include "swreg/hardness.hpp"
#include "swreg/io/bench.hpp"
#include "swreg/io/dataset_io.hpp"
#include "swreg/io/env.hpp"
#include "swreg/io/generate.hpp"
#include "swreg/io/report_json.hpp"
#include "swreg/solvers.hpp"
