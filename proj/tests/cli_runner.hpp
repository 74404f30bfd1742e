#pragma once

// Small popen wrapper for driving the relalt binary from tests. The binary
// path arrives as argv[1] of the test executable and is stashed in a global
// before doctest (or the acceptance main) takes over.

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace testcli {

inline std::string& cli_path() {
    static std::string path;
    return path;
}

struct CliResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

inline CliResult run(const std::string& args) {
    static int counter = 0;
    const auto err_file = std::filesystem::temp_directory_path() /
                          ("relalt_cli_err_" + std::to_string(++counter) + ".txt");
    const std::string cmd = cli_path() + " " + args + " 2>" + err_file.string();

    CliResult result;
    FILE* pipe = ::popen(cmd.c_str(), "r");
    if (!pipe) return result;
    char buf[4096];
    std::size_t got = 0;
    while ((got = std::fread(buf, 1, sizeof(buf), pipe)) > 0)
        result.out.append(buf, got);
    const int status = ::pclose(pipe);
    if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);

    std::ifstream err_in(err_file);
    std::ostringstream ss;
    ss << err_in.rdbuf();
    result.err = ss.str();
    err_in.close();
    std::filesystem::remove(err_file);
    return result;
}

inline std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) lines.push_back(line);
    return lines;
}

}  // namespace testcli
