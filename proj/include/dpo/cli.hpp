#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace dpo::cli {

/// Process exit codes: ok answers the question positively, falsified
/// negatively; the other two report unusable input or an out-of-bounds
/// search request.
enum class Status { Ok = 0, Falsified = 1, InputError = 2, TooLarge = 3 };

struct CommandOutcome {
  Status status = Status::Ok;
  nlohmann::ordered_json payload;
};

constexpr int exit_code(Status status) { return static_cast<int>(status); }

/// Runs one subcommand; args exclude the program name. Never throws: every
/// failure becomes a status plus a payload with an "error" field.
CommandOutcome dispatch(const std::vector<std::string>& args);

}  // namespace dpo::cli
