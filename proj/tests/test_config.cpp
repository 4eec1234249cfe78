// Copyright 2026 The skrates Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cstdlib>

#include "skrates/skrates.hpp"
#include "support/test_support.hpp"

namespace skrates {
namespace {

class EnvGuard {
 public:
  explicit EnvGuard(const char* value) {
    if (const char* old = std::getenv("SKRATES_MAX_VERTICES")) saved_ = old;
    if (value) {
      setenv("SKRATES_MAX_VERTICES", value, 1);
    } else {
      unsetenv("SKRATES_MAX_VERTICES");
    }
  }
  ~EnvGuard() {
    if (saved_) {
      setenv("SKRATES_MAX_VERTICES", saved_->c_str(), 1);
    } else {
      unsetenv("SKRATES_MAX_VERTICES");
    }
  }

 private:
  std::optional<std::string> saved_;
};

TEST(Config, DefaultCap) {
  EnvGuard env(nullptr);
  EXPECT_EQ(enumeration_cap(), kDefaultEnumerationCap);
}

TEST(Config, EnvironmentOverride) {
  EnvGuard env("3");
  EXPECT_EQ(enumeration_cap(), 3U);
  const auto six = testing::six_user_example();
  EXPECT_THROW(mmi(six, six.all()), CapExceededError);
  EXPECT_THROW(generate_certificates(six), CapExceededError);
  const auto tri = testing::triangle_pin();
  EXPECT_EQ(mmi(tri, tri.all()).value, make_rational(3, 2));
}

TEST(Config, RejectsMalformedOverride) {
  for (const char* bad : {"one", "1", "-4"}) {
    EnvGuard env(bad);
    EXPECT_THROW(enumeration_cap(), InputError) << bad;
  }
}

}  // namespace
}  // namespace skrates
