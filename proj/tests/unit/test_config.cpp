// Copyright 2026 The coregap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "coregap/config.hpp"

#include <gtest/gtest.h>

#include <string_view>

#include "coregap/error.hpp"

using namespace coregap;

TEST(config, defaults_validate) {
  CircuitConfig c;
  c.p_single = 1.0;
  validate(c);
  ASSERT_EQ(c.n_qubits(), 2u);
}

TEST(config, degenerate_core) {
  CircuitConfig c;
  c.n_qubits_per_core = 1;
  c.p_single = 0.5;
  try {
    validate(c);
    FAIL();
  } catch (const Error& e) {
    ASSERT_EQ(e.code(), Errc::DegenerateCore);
  }
}

TEST(config, caps) {
  CircuitConfig c;
  c.n_cores = 5;
  c.n_qubits_per_core = 3;
  ASSERT_THROW(check_statevector_cap(c, {}), Error);
  c.n_cores = 4;
  check_statevector_cap(c, {});
  ASSERT_THROW(check_markov_cap(c, {}), Error);
  c.n_qubits_per_core = 2;
  check_markov_cap(c, {});
}

TEST(config, parse_round_trip) {
  CircuitConfig c;
  c.n_cores = 3;
  c.n_qubits_per_core = 2;
  c.intracore_steps = 4;
  c.topology = TopologyKind::Star;
  c.p_single = 0.25;
  c.c_rand = 1.0 / 3.0;
  c.master_seed = 12345678901234ULL;
  const std::string text = format_config_text(c);
  ASSERT_EQ(config_from_values(parse_config_text(text)), c);
}

TEST(config, comments_and_blank_lines) {
  const ConfigValues v = parse_config_text("# header\n\n n_cores = 4 \ntopology=ring # trailing\n");
  ASSERT_EQ(v.at("n_cores"), "4");
  ASSERT_EQ(v.at("topology"), "ring");
}

TEST(config, parse_error_names_line) {
  try {
    parse_config_text("n_cores = 2\nthis line is bad\n");
    FAIL();
  } catch (const Error& e) {
    ASSERT_EQ(e.code(), Errc::ParseError);
    ASSERT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
}

TEST(config, missing_required_key) {
  constexpr std::string_view required[] = {"n_cores", "topology"};
  try {
    config_from_values(parse_config_text("n_cores = 2\n"), required);
    FAIL();
  } catch (const Error& e) {
    ASSERT_EQ(e.code(), Errc::InvalidConfig);
    ASSERT_NE(std::string(e.what()).find("'topology'"), std::string::npos);
  }
}

TEST(config, unknown_key) {
  ASSERT_THROW(config_from_values(parse_config_text("n_core = 2\n")), Error);
}

TEST(config, bad_number) {
  ASSERT_THROW(config_from_values(parse_config_text("n_cores = two\n")), Error);
  ASSERT_THROW(config_from_values(parse_config_text("p_single = 0.5x\n")), Error);
}

TEST(config, format_double_round_trips) {
  for (double v : {0.0, 1.0 / 3.0, 0.1, 1e-300, -2.5}) ASSERT_EQ(std::stod(format_double(v)), v);
  ASSERT_EQ(format_double(0.5), "0.5");
}
