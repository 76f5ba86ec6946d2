// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ncproof/proof.hpp"

namespace fixtures {

inline std::string path(const std::string& name) { return std::string(NCPROOF_FIXTURE_DIR) + "/" + name; }

inline std::string read(const std::string& name) {
  std::ifstream in(path(name), std::ios::binary);
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline ncproof::Proof proof(const std::string& name) { return ncproof::parse_proof(read(name)); }

/// Fixture proofs that end in the constant 1.
inline const std::vector<std::string>& refutations() {
  static const std::vector<std::string> names = {
      "pc_trivial.proof",     "pc_fphp_2_1.proof",    "pc_fphp_2_1_gf3.proof", "pcr_fphp_2_1.proof",
      "pcr_complement.proof", "nfpc_basic.proof",     "ofpc_fphp_2_1.proof",   "ofpc_reversed.proof",
      "fpc_all_rules.proof",
  };
  return names;
}

inline const std::vector<std::string>& all_proofs() {
  static const std::vector<std::string> names = [] {
    auto v = refutations();
    v.push_back("fpc_assoc.proof");
    return v;
  }();
  return names;
}

}  // namespace fixtures
