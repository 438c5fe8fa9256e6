// Command-line front end: every verification and computation as a scriptable
// subcommand with text and JSON output.  run_command is the in-process entry
// point used by the binary, the tests and the python bindings.
#pragma once

#include <complex>
#include <iostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qep/calculus.hpp"

namespace qep::cli {

struct CommandResult {
  int exit_code = 0;             // 0 pass / 1 check failure / 2 usage error
  std::string status;            // "pass", "fail" or "value"
  nlohmann::json payload;
};

CommandResult run_command(const std::vector<std::string>& argv,
                          std::ostream& out = std::cout,
                          std::istream& in = std::cin);

// Structured payloads behind the subcommands; also the python API surface.
nlohmann::json normalize_payload(const std::string& expr_text, CalcType type);
nlohmann::json exterior_d_payload(const std::string& expr_text, CalcType type);
nlohmann::json derive_payload(const std::string& expr_text,
                              const std::string& wrt, CalcType type);
nlohmann::json solve_ansatz_payload();
nlohmann::json consistency_payload(CalcType type, bool flipped_sign);
nlohmann::json confluence_payload(CalcType type, bool flipped_sign);
nlohmann::json ybe_payload(CalcType type);
nlohmann::json rcheck_payload(CalcType type);
nlohmann::json rtt_payload(CalcType type);
nlohmann::json covariance_payload(CalcType type, bool commutative_control);
nlohmann::json fock_payload(CalcType type, std::complex<double> q_val);
nlohmann::json verify_all_payload(unsigned seed);

}  // namespace qep::cli
