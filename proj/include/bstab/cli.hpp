#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "bstab/shapes.hpp"

namespace bstab::cli {

enum ExitCode : int {
    kOk = 0,
    kIdentityFailed = 1,
    kInvalidInput = 2,
    kLimitExceeded = 3,
};

/// Default cap on estimated enumeration work (see estimate_tableau_work).
inline constexpr double kDefaultLimit = 1e9;

/// Upper estimate of visited fillings for the tableau-based commands:
/// (1 + k|lambda|) * prod_i C(lambda_i + k, k). The product bounds |RPP| = |SYT|
/// row by row, and a BSSYT enumeration costs at most k|lambda| times that.
double estimate_tableau_work(const Partition& lambda, int k);

/// Upper estimate for the FK dynamic programme: n! (n-1) (ell+1)^2.
double estimate_fk_work(int n, int ell);

/// Runs one invocation. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bstab::cli
