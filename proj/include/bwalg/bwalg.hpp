#pragma once
// Everything: exact arithmetic, root systems, pyramids, weights, characters,
// modular data, the E8 computation, verification suites and reports.

#include "report.hpp"
