#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "bgm/term.hpp"

namespace bgm {

// Entry point behind the bgmtool binary; args exclude the program name.
// 0 = success / affirmative, 1 = checked negative, 2 = structural or usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out);

// Graph a bare term (or a parallel pair) lives over, recovered by unifying
// endpoint constraints; unit atoms pin node names, the rest are synthesized.
Graph infer_graph(const std::vector<Term>& terms, bool parallel);

std::string print_cell2(const Cell2& t);

}  // namespace bgm
