#pragma once

// The qshuffle command line.  run() is the whole program minus main(), so the
// tests can drive it with captured streams.
//
// Exit codes: 0 success, 1 a checked identity failed, 2 usage or input error,
// 3 a resource bound was exceeded.

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "qsh/cartan.hpp"

namespace qsh::cli {

enum Exit { ok = 0, failure = 1, usage = 2, too_large = 3 };

// {"name": "B2"} or {"cartan": [[...]], "d": [...]}; d is derived when absent.
// Throws DatumError.
CartanDatum datum_from_json(const nlohmann::json& j);
CartanDatum load_datum(const std::string& path);

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qsh::cli
