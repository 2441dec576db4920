#ifndef NAMEREL_CLI_H_
#define NAMEREL_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace namerel {

// Exit statuses: 0 success, 1 I/O or input format failure, 2 usage error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

// Environment variable naming a wordlist to use when --wordlist is absent.
inline constexpr const char* kWordlistEnv = "NAMEREL_WORDLIST";

// Runs the `namerel` command line. `args` excludes the program name. Reports
// go to `out` unless -o is given; diagnostics always go to `err`.
int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Directory holding the shipped wordlist, stopwords and lemma exceptions.
std::string DefaultDataDir();

}  // namespace namerel

#endif  // NAMEREL_CLI_H_
