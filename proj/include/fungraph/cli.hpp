#ifndef FUNGRAPH_CLI_HPP_
#define FUNGRAPH_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace fungraph::cli {

//! Dispatches one command line (without the program name). Exit codes:
//! 0 ok, 1 usage/parse/invalid input, 2 verification failure,
//! 3 bound exceeded with an unknown result.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fungraph::cli

#endif  // FUNGRAPH_CLI_HPP_
