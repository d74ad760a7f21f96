#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "hypercert/module_io.hpp"

using namespace hypercert;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void expect_same(const RationalModule& a, const RationalModule& b) {
  EXPECT_EQ(a.name(), b.name());
  EXPECT_EQ(*a.field(), *b.field());
  EXPECT_EQ(a.tag(), b.tag());
  EXPECT_EQ(a.r(), b.r());
  EXPECT_EQ(a.weights(), b.weights());
  EXPECT_EQ(a.has_weights(), b.has_weights());
  for (std::size_t root = 0; root < a.tag().num_roots(); ++root) {
    ASSERT_EQ(a.nilpotence_bound(root), b.nilpotence_bound(root));
    for (std::size_t n = 0; n < a.nilpotence_bound(root); ++n) EXPECT_EQ(a.op(root, n), b.op(root, n));
  }
}

TEST(ModuleIo, RoundTrip) {
  const FieldPtr f4 = build_field(2, 2);
  for (const auto& m : {steinberg(build_field(3, 2), 3, 2), regular_module(heisenberg_algebra(2, 1, build_field(2, 1))),
                        pullback_additive(steinberg(build_field(2, 4), 2, 1), AdditivePolynomial::lang_type(build_field(2, 4), 2)),
                        tensor(natural_sl2(f4, 2), natural_sl2(f4, 2))}) {
    const std::string text = serialize_module(m);
    const RationalModule back = parse_module(text);
    expect_same(m, back);
    EXPECT_EQ(serialize_module(back), text);
  }
}

TEST(ModuleIo, SteinbergGoldenIsByteStable) {
  const std::string golden = read_file(std::string(HYPERCERT_GOLDEN_DIR) + "/steinberg_p2_r2.json");
  ASSERT_FALSE(golden.empty());
  EXPECT_EQ(serialize_module(steinberg(build_field(2, 2), 2, 2)), golden);
}

TEST(ModuleIo, MalformedInputIsRejected) {
  const std::string good = serialize_module(natural_sl2(build_field(3, 1), 1));
  EXPECT_THROW(parse_module("{ not json"), std::invalid_argument);
  EXPECT_THROW(parse_module("{}"), std::invalid_argument);
  auto swap = [&](const std::string& from, const std::string& to) {
    std::string s = good;
    const auto pos = s.find(from);
    EXPECT_NE(pos, std::string::npos) << from;
    return s.replace(pos, from.size(), to);
  };
  EXPECT_THROW(parse_module(swap("hypercert.module/1", "hypercert.module/9")), std::invalid_argument);
  EXPECT_THROW(parse_module(swap("\"dim\": 2", "\"dim\": 3")), std::invalid_argument);
  EXPECT_THROW(parse_module(swap("\"tag\": \"A1\"", "\"tag\": \"G2\"")), std::invalid_argument);
}

TEST(ModuleIo, EntriesOutsideTheFieldAreRejected) {
  const std::string good = serialize_module(natural_sl2(build_field(2, 1), 1));
  std::string bad = good;
  const auto pos = bad.find("\"alpha\"");
  ASSERT_NE(pos, std::string::npos);
  const auto one = bad.find('1', pos);
  bad[one] = '7';
  EXPECT_THROW(parse_module(bad), std::invalid_argument);
}

}  // namespace
