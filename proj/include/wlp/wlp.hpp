#pragma once

// Umbrella header: the weak Lefschetz property of K[X,Y,Z]/(X^d,Y^d,Z^d)
// over F_p, decided three mutually cross-checking ways.

#include "wlp/criterion.hpp"
#include "wlp/fp.hpp"
#include "wlp/fp_matrix.hpp"
#include "wlp/graded_algebra.hpp"
#include "wlp/int_util.hpp"
#include "wlp/records.hpp"
#include "wlp/syzygy_gap.hpp"
#include "wlp/verdict.hpp"
#include "wlp/version.hpp"
