// commands.hpp - the subcommands of cyclo-cli, returning their documents as
// text so they can be tested without a process boundary.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cyclo/crystal.hpp"
#include "cyclo/heisenberg.hpp"
#include "cyclo/params.hpp"

namespace cyclo::cli {

enum class Format { json, dot };

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kInputError = 2;
inline constexpr int kAmbiguity = 3;
inline constexpr int kTruncation = 4;

std::string cmd_crystal(const CherednikParams& p, int n_max, Format fmt, TiePolicy ties);
std::string cmd_support(const CherednikParams& p, int n);

struct FockMatrixRequest {
  std::string op;  // f | e | bplus | bminus
  int from = 0;
  std::optional<Residue> z;
  int d = 1;
  std::optional<int> class_id;
};
std::string cmd_fock_matrix(const CherednikParams& p, const FockMatrixRequest& req);
std::string cmd_fock_singular(const CherednikParams& p, int n);
std::string cmd_fock_filtration(const CherednikParams& p, int n);

std::string cmd_params(const CherednikParams& p, int n);
std::string cmd_wallcross(const CherednikParams& p, const WallDescriptor& wall,
                          WallCrossStep::Direction dir, int n);
std::string cmd_rank1(int level, const std::vector<Rational>& h, int k, int j);

// Maps the exception currently being handled to an exit code.
int exit_code_for_current_exception(std::string& message);

}  // namespace cyclo::cli
