#pragma once

#include <string>

#include "gwadams/lambda.hpp"

namespace gwadams::cli {

/// Parses a target for `adams`: either SymClass / coefficient-ring JSON (starting
/// with '{') or an expression such as "2*u1*u2 - (1 - eps)*gamma^-1*tau" over
/// eps, tau, gamma, h and u1, u2, ... . Throws ParseError.
lambda::SymClass parse_target(const std::string& text);

}  // namespace gwadams::cli
