#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tq {

/*
 * Exit codes: 0 success, 1 domain error (axiom/continuity/cocycle failure,
 * with the validation report printed), 2 usage or parse error with a
 * one-line diagnostic naming the offending field.
 */
struct RunConfig {
    int max_degree = 8;             // cap on --degree / --nmax
    long long max_basis_rank = 200000;  // cap on any single chain-group rank
};

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const RunConfig& config = {});

}  // namespace tq
