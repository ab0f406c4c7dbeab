#pragma once

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <sys/wait.h>

#include "jcd/io.hpp"

namespace testsupport {

inline std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("test fixture missing: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline std::string fixture_path(const std::string& name) {
    return std::string(JCD_DATA_DIR) + "/worked15/" + name;
}

inline std::string fixture_text(const std::string& name) {
    return slurp(fixture_path(name));
}

inline jcd::SquareMatrix fixture_matrix(const std::string& name) {
    return jcd::parse_matrix(fixture_text(name));
}

inline jcd::Polynomial fixture_poly(const std::string& name) {
    return jcd::parse_polynomial(fixture_text(name));
}

struct CliResult {
    int exit_code = -1;
    std::string output;
};

// Runs the CLI binary with the given argument string, capturing stdout.
// stderr is folded into the captured stream so diagnostics show up in
// failure messages.
inline CliResult run_cli(const std::string& args) {
    std::string cmd = std::string(JCD_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe)
        throw std::runtime_error("cannot spawn CLI: " + cmd);
    CliResult res;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0)
        res.output.append(buf, got);
    int status = pclose(pipe);
    res.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    return res;
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!(out << content))
        throw std::runtime_error("cannot write " + path);
}

} // namespace testsupport
