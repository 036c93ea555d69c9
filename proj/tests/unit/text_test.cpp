// Copyright 2026 The Judge Authors
// SPDX-License-Identifier: Apache-2.0

#include "judge/text.hpp"

#include <gtest/gtest.h>

namespace judge::text {
namespace {

TEST(Text, LowercasesAsciiAndLatin1) {
  EXPECT_EQ(to_lower("BATERIA"), "bateria");
  EXPECT_EQ(to_lower("ÁÉÍÓÚÇÃÕÂÊÔ"), "áéíóúçãõâêô");
  EXPECT_EQ(to_upper("câmbio"), "CÂMBIO");
}

TEST(Text, CaseMappingLeavesMathSignsAlone) {
  EXPECT_EQ(to_lower("×"), "×");
  EXPECT_EQ(to_upper("÷"), "÷");
}

TEST(Text, LeavesOtherScriptsUntouched) { EXPECT_EQ(to_lower("ΑΒΓ"), "ΑΒΓ"); }

TEST(Text, Trim) {
  EXPECT_EQ(trim("  a b \t\n"), "a b");
  EXPECT_EQ(trim(""), "");
  EXPECT_EQ(trim("   "), "");
}

TEST(Text, SplitWhitespaceDropsEmpties) {
  auto parts = split_whitespace("  a  b\tc\n");
  ASSERT_EQ(parts.size(), 3u);
  EXPECT_EQ(parts[2], "c");
}

TEST(Text, SplitKeepsEmpties) {
  auto parts = split("a\t\tb\t", '\t');
  ASSERT_EQ(parts.size(), 4u);
  EXPECT_EQ(parts[1], "");
  EXPECT_EQ(parts[3], "");
}

TEST(Text, Join) {
  EXPECT_EQ(join({"a", "b", "c"}, " "), "a b c");
  EXPECT_EQ(join({}, " "), "");
}

TEST(Text, Utf8Validation) {
  EXPECT_TRUE(is_valid_utf8("está"));
  EXPECT_TRUE(is_valid_utf8(""));
  EXPECT_FALSE(is_valid_utf8("\xC3"));
  EXPECT_FALSE(is_valid_utf8("\xFF"));
  EXPECT_FALSE(is_valid_utf8("a\xE2\x82"));
}

TEST(Text, LanguageTags) {
  EXPECT_TRUE(is_language_tag("pt"));
  EXPECT_FALSE(is_language_tag("PT"));
  EXPECT_FALSE(is_language_tag("por"));
  EXPECT_FALSE(is_language_tag(""));
}

}  // namespace
}  // namespace judge::text
