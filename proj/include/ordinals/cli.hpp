#ifndef ORDINALS_CLI_HPP
#define ORDINALS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace ordinals::cli {

// Dispatches one command. Exit code 0 on success, 1 on parse errors and
// selftest failures, 2 on domain errors (bad verbs and arities included).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ordinals::cli

#endif
