#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace farey::cli {

struct Options {
    bool color = false;  // ANSI colour for true/false verdicts
};

// Exit codes: 0 success or predicate true, 1 predicate false, 2 input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, Options opts = {});

}  // namespace farey::cli
