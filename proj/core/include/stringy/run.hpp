#ifndef STRINGY_RUN_HPP
#define STRINGY_RUN_HPP

#include <iosfwd>
#include <string>

namespace stringy {

/// One CLI invocation. Exit codes: 0 success (and, for the check commands,
/// identity holds), 1 identity fails, 2 input or usage error.
struct RunConfig {
    enum class Cmd { estringy, epoly, resolve, phi, check_lemma, dual, check_mirror };

    Cmd command = Cmd::estringy;
    std::string input_path;     // fan or polytope file
    std::string ev_path, ew_path;
    long long type_a = 0, type_b = 0;
    bool has_type = false;
    std::string seed_text = "1";
    unsigned mirror_n = 0;
    bool via_resolution = false;
    bool json = false;
};

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// argv-level front end (argv[0] is skipped).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace stringy

#endif
