// Copyright 2026 The Onramp Altruism Authors
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

#include "onramp/config_io.h"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "test_support.h"

namespace onramp {
namespace {

constexpr const char* kCalibratedJson = R"({
  "n0": 0.37, "c1t": 1, "c1m": 21.3, "c2t": 1, "c2m": 1,
  "mu": 2.4, "gamma": 8.6
})";

void ExpectInvalid(const std::string& text, const std::string& needle) {
  try {
    ParseConfigJson(text);
    FAIL() << "accepted: " << text;
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInvalidConfig);
    EXPECT_NE(std::string(e.what()).find(needle), std::string::npos)
        << e.what();
  }
}

TEST(ParseConfigJsonTest, CalibratedConfig) {
  const OnRampConfig config = ParseConfigJson(kCalibratedJson);
  const OnRampConfig expected = testing::CalibratedConfig();
  EXPECT_EQ(config.flows().n0(), expected.flows().n0());
  EXPECT_EQ(config.costs().c1m, expected.costs().c1m);
  EXPECT_EQ(config.costs().gamma, expected.costs().gamma);
  EXPECT_NEAR(config.flows().n2(), 0.63, 1e-15);
}

TEST(ParseConfigJsonTest, MissingKeyIsNamed) {
  ExpectInvalid(R"({"n0": 0.37, "c1t": 1, "c1m": 21.3, "c2t": 1, "c2m": 1,
                   "gamma": 8.6})",
                "'mu'");
}

TEST(ParseConfigJsonTest, RejectsMalformedInput) {
  ExpectInvalid("{not json", "");
  ExpectInvalid("[1, 2]", "");
  ExpectInvalid(R"({"n0": "0.37", "c1t": 1, "c1m": 21.3, "c2t": 1,
                   "c2m": 1, "mu": 2.4, "gamma": 8.6})",
                "n0");
  ExpectInvalid(R"({"n0": 0.37, "c1t": 1, "c1m": 21.3, "c2t": 1, "c2m": 1,
                   "mu": 2.4, "gamma": 8.6, "lanes": 3})",
                "lanes");
  ExpectInvalid(R"({"n0": 1.5, "c1t": 1, "c1m": 21.3, "c2t": 1, "c2m": 1,
                   "mu": 2.4, "gamma": 8.6})",
                "n0");
  ExpectInvalid(R"({"n0": 0.37, "c1t": -1, "c1m": 21.3, "c2t": 1, "c2m": 1,
                   "mu": 2.4, "gamma": 8.6})",
                "c1t");
}

TEST(ConfigToJsonTest, RoundTrips) {
  const OnRampConfig config = testing::CalibratedConfig();
  const OnRampConfig again = ParseConfigJson(ConfigToJson(config));
  EXPECT_EQ(again.flows().n0(), config.flows().n0());
  EXPECT_EQ(again.costs().c1t, config.costs().c1t);
  EXPECT_EQ(again.costs().c1m, config.costs().c1m);
  EXPECT_EQ(again.costs().c2t, config.costs().c2t);
  EXPECT_EQ(again.costs().c2m, config.costs().c2m);
  EXPECT_EQ(again.costs().mu, config.costs().mu);
  EXPECT_EQ(again.costs().gamma, config.costs().gamma);
}

TEST(LoadConfigFileTest, ReadsAndReportsMissingFile) {
  const auto path =
      std::filesystem::temp_directory_path() / "onramp_config_io_test.json";
  {
    std::ofstream out(path);
    out << kCalibratedJson;
  }
  EXPECT_EQ(LoadConfigFile(path.string()).costs().mu, 2.4);
  std::filesystem::remove(path);
  EXPECT_THROW(LoadConfigFile(path.string()), Error);
}

}  // namespace
}  // namespace onramp
