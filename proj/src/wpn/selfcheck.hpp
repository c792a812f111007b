#pragma once

#include <functional>
#include <string>

namespace wpn {

using ReportFn = std::function<void(const std::string&)>;

// Runs the built-in validation battery (special functions, density
// normalizations, bound inequalities) and reports one PASS/FAIL line per
// check. Returns the number of failures.
int selfcheck(const ReportFn& report);

}  // namespace wpn
