#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace reftype::cli {

enum ExitCode : int { kOk = 0, kMismatch = 1, kUsage = 2 };

/// Runs the command line tool. args excludes the program name.
/// Results go to `out` (or to --out PATH), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Corpus directory used by `verify` when --corpus is not given.
std::string default_corpus_dir();

}  // namespace reftype::cli
