// Optional zero-table fetch helper: downloads over HTTP, verifies a
// caller-supplied SHA-256, and only then stores the file.  Never invoked by
// any test; network use is strictly opt-in through the CLI.

#ifndef ZETASHIFT_FETCH_HPP
#define ZETASHIFT_FETCH_HPP

#include <filesystem>
#include <fstream>
#include <string>

#include <httplib.h>

#include "zetashift/errors.hpp"
#include "zetashift/sha256.hpp"

namespace zetashift {

// Checksum gate shared by the downloader and its tests: refuses (and does not
// write) unless the payload hashes to `expected_sha256` (lowercase hex).
inline void verify_and_store(const std::string& bytes,
                             const std::string& expected_sha256,
                             const std::string& out_path) {
    std::string lower = expected_sha256;
    for (char& c : lower)
        if (c >= 'A' && c <= 'F') c = static_cast<char>(c - 'A' + 'a');
    const std::string got = sha256_hex(bytes);
    if (got != lower)
        throw data_error("checksum mismatch: expected " + lower + ", got " + got);
    const auto dir = std::filesystem::path(out_path).parent_path();
    if (!dir.empty()) std::filesystem::create_directories(dir);
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw data_error("cannot write: " + out_path);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

// url: http://host[:port]/path
inline void fetch_zero_table(const std::string& url,
                             const std::string& expected_sha256,
                             const std::string& out_path) {
    const std::string scheme = "http://";
    if (url.rfind(scheme, 0) != 0)
        throw usage_error("fetch: only http:// URLs are supported");
    const std::string rest = url.substr(scheme.size());
    const auto slash = rest.find('/');
    const std::string host = slash == std::string::npos ? rest : rest.substr(0, slash);
    const std::string path = slash == std::string::npos ? "/" : rest.substr(slash);
    httplib::Client cli(("http://" + host).c_str());
    cli.set_follow_location(true);
    auto res = cli.Get(path.c_str());
    if (!res || res->status != 200)
        throw data_error("fetch: request failed for " + url +
                         (res ? " (status " + std::to_string(res->status) + ")"
                              : " (no response)"));
    verify_and_store(res->body, expected_sha256, out_path);
}

} // namespace zetashift

#endif
