#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "minorkit/classify.hpp"
#include "minorkit/groebner.hpp"

namespace minorkit {

struct JobConfig {
    enum class Input { matrix_file, blocks };
    enum class Output { text, json };

    Input input = Input::blocks;
    std::string source; // file path, or inline block tokens
    // absent: rationals for block input, the file header's choice for matrix
    // input (defaulting to the rationals)
    std::optional<long> characteristic;
    bool verify = true; // auto-verify witnesses up to max_verify_vars
    bool force_verify = false;
    size_t max_verify_vars = 12;
    MonomialOrder order = MonomialOrder::degrevlex;
    Output output = Output::text;
    GBLimits limits;
};

// 0 ok; 1 bad input or internal failure; 2 witness verification failed;
// 3 resource cap exceeded; 4 pencil eigenvalues outside the base field
int exit_code_for(ErrorKind k);

// parse -> decompose -> analyze -> verify -> serialize
int run_job(const JobConfig& cfg, std::ostream& out, std::ostream& err);

} // namespace minorkit
