#pragma once

#include "hmclass/classes.hpp"
#include "hmclass/coefficient_file.hpp"
#include "hmclass/errors.hpp"
#include "hmclass/functional.hpp"
#include "hmclass/params.hpp"
#include "hmclass/random.hpp"
#include "hmclass/report_io.hpp"
#include "hmclass/series.hpp"
#include "hmclass/specfn.hpp"
#include "hmclass/structure.hpp"
#include "hmclass/verify.hpp"
#include "hmclass/weights.hpp"
