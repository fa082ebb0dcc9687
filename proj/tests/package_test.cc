// Copyright 2026 The PDM Authors
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


#include <algorithm>
#include <filesystem>
#include <string>

#include <gtest/gtest.h>

#include "pdm/common/error.h"
#include "pdm/package/package_codec.h"
#include "pdm/package/package_json.h"
#include "pdm/package/top_k.h"
#include "support/generators.h"

namespace pdm::package {
namespace {

const std::filesystem::path kDataDir = PDM_DATA_DIR;

ServiceElement text_element(std::string id, std::uint32_t priority, bool mandatory,
                            std::string role = "object") {
  ServiceElement e;
  e.element_id = std::move(id);
  e.modality = Modality::kText;
  e.role = std::move(role);
  e.priority = priority;
  e.mandatory = mandatory;
  e.payload = to_bytes("payload of " + e.element_id);
  return e;
}

PromptPackage small_package() {
  PromptPackage p;
  p.package_id = "P";
  p.provider_id = "prov";
  p.schedule = {0, 10000};
  p.elements = {text_element("b", 1, false), text_element("a", 0, true)};
  return p;
}

TEST(PackageCodecTest, RandomPackagesRoundTripBitExact) {
  testing::Rng rng(21);
  for (int i = 0; i < 1000; ++i) {
    PromptPackage p = testing::random_package(rng, "pkg" + std::to_string(i));
    ASSERT_TRUE(validate_package(p).ok());
    Bytes wire = encode_package(p);
    PromptPackage back = decode_package(wire);
    ASSERT_EQ(back, canonical(p)) << "iteration " << i;
    ASSERT_EQ(encode_package(back), wire) << "iteration " << i;
    ASSERT_EQ(package_wire_size(p), wire.size());
  }
}

TEST(PackageCodecTest, EncodingIgnoresElementOrder) {
  testing::Rng rng(22);
  for (int i = 0; i < 300; ++i) {
    PromptPackage p = testing::random_package(rng, "pkg");
    PromptPackage shuffled = p;
    std::shuffle(shuffled.elements.begin(), shuffled.elements.end(), rng);
    ASSERT_EQ(encode_package(p), encode_package(shuffled));
  }
}

TEST(PackageCodecTest, RejectsCorruptInput) {
  Bytes wire = encode_package(small_package());
  for (std::size_t n = 0; n < wire.size(); ++n) {
    Bytes prefix(wire.begin(), wire.begin() + static_cast<std::ptrdiff_t>(n));
    EXPECT_THROW(decode_package(prefix), Error) << "prefix " << n;
  }
  Bytes bad_magic = wire;
  bad_magic[1] = 'Q';
  EXPECT_THROW(decode_package(bad_magic), CodecError);
  Bytes trailing = wire;
  trailing.push_back(7);
  EXPECT_THROW(decode_package(trailing), CodecError);
}

TEST(PackageCodecTest, RejectsUnknownVersion) {
  Bytes wire = encode_package(small_package());
  wire[4] = 2;
  try {
    decode_package(wire);
    FAIL() << "expected a version error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kVersion);
  }
}

TEST(PackageCodecTest, ElementOverheadMatchesEncoding) {
  PromptPackage p = small_package();
  std::size_t header = encode_package(PromptPackage{p.package_id, p.provider_id, {}, p.schedule, 1}).size();
  std::size_t expected = header;
  for (const auto& e : p.elements) expected += element_overhead(e) + e.bytes()->size();
  EXPECT_EQ(encode_package(p).size(), expected);
}

TEST(PackageValidationTest, ReportsEachProblem) {
  PromptPackage p = small_package();
  EXPECT_TRUE(validate_package(p).empty());
  p.package_id.clear();
  p.schedule.duration = 0;
  p.elements.push_back(text_element("a", 3, false));
  p.elements.push_back(text_element("", 3, false));
  ServiceElement empty = text_element("c", 0, false);
  empty.payload = Bytes{};
  p.elements.push_back(empty);
  ServiceElement mismatch = text_element("d", 0, false);
  mismatch.modality = Modality::kSemantics;
  p.elements.push_back(mismatch);
  ValidationReport r = validate_package(p);
  EXPECT_FALSE(r.ok());
  EXPECT_EQ(r.count(IssueCode::kEmptyId), 1u);
  EXPECT_EQ(r.count(IssueCode::kInvalidSchedule), 1u);
  EXPECT_EQ(r.count(IssueCode::kDuplicateElement), 1u);
  EXPECT_EQ(r.count(IssueCode::kEmptyElementId), 1u);
  EXPECT_EQ(r.count(IssueCode::kEmptyPayload), 1u);
  EXPECT_EQ(r.count(IssueCode::kPayloadMismatch), 1u);
  EXPECT_EQ(validate_package(PromptPackage{"x", "", {}, {0, 1}, 1}).count(IssueCode::kNoElements), 1u);
}

TEST(PackageValidationTest, EmptyMetadataIsAllowed) {
  PromptPackage p = small_package();
  ServiceElement meta = text_element("meta", 0, false);
  meta.modality = Modality::kMetadata;
  meta.payload = Bytes{};
  p.elements.push_back(meta);
  EXPECT_TRUE(validate_package(p).ok());
}

TEST(TopKTest, KeepsMandatoryAndBestOptional) {
  PromptPackage p = small_package();
  p.elements = {text_element("m1", 9, true), text_element("o3", 3, false),
                text_element("o1", 1, false), text_element("o1b", 1, false),
                text_element("m2", 9, true)};
  auto ids = [](const PromptPackage& q) {
    std::vector<std::string> out;
    for (const auto& e : q.elements) out.push_back(e.element_id);
    return out;
  };
  EXPECT_EQ(ids(select_top_k(p, 3).package), (std::vector<std::string>{"m1", "o1", "m2"}));
  EXPECT_EQ(ids(select_top_k(p, 4).package), (std::vector<std::string>{"m1", "o1", "o1b", "m2"}));
  EXPECT_EQ(select_top_k(p, 10).package, p);
  TopKResult overflow = select_top_k(p, 1);
  EXPECT_TRUE(overflow.mandatory_overflow);
  EXPECT_EQ(ids(overflow.package), (std::vector<std::string>{"m1", "m2"}));
  EXPECT_THROW(select_top_k(p, 0), Error);
}

TEST(PackageJsonTest, BundledPackagesLoadAndValidate) {
  int files = 0;
  for (const auto& entry : std::filesystem::directory_iterator(kDataDir / "packages")) {
    PromptPackage p = load_package_file(entry.path());
    EXPECT_TRUE(validate_package(p).ok()) << entry.path();
    ++files;
  }
  EXPECT_GE(files, 4);
  PromptPackage concert = load_package_file(kDataDir / "packages" / "concert-promo.json");
  bool has_graph = std::any_of(concert.elements.begin(), concert.elements.end(),
                               [](const ServiceElement& e) { return e.graph() != nullptr; });
  EXPECT_TRUE(has_graph);
}

TEST(PackageJsonTest, RandomPackagesRoundTrip) {
  testing::Rng rng(23);
  for (int i = 0; i < 300; ++i) {
    PromptPackage p = testing::random_package(rng, "json" + std::to_string(i));
    PromptPackage back = package_from_json(package_to_json(p));
    ASSERT_EQ(encode_package(back), encode_package(p)) << "iteration " << i;
  }
}

TEST(PackageJsonTest, SchemaViolationsAreParseErrors) {
  nlohmann::json good = package_to_json(small_package());
  auto expect_parse_error = [](const nlohmann::json& j) {
    try {
      package_from_json(j);
      ADD_FAILURE() << "accepted " << j.dump();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kParse) << j.dump();
    }
  };
  nlohmann::json j = good;
  j.erase("package_id");
  expect_parse_error(j);
  j = good;
  j["elements"][0]["payload"] = {{"text", "a"}, {"hex", "00"}};
  expect_parse_error(j);
  j = good;
  j["elements"][0]["payload"] = {{"text", 5}};
  expect_parse_error(j);
  j = good;
  j["elements"][0]["payload"] = {{"hex", "abc"}};
  expect_parse_error(j);
  j = good;
  j["elements"][0]["modality"] = "smell";
  expect_parse_error(j);
  j = good;
  j["elements"][0]["modality"] = "semantics";
  expect_parse_error(j);
  j = good;
  j["schedule"]["duration_ms"] = "long";
  expect_parse_error(j);
}

TEST(PackageJsonTest, HexHelpers) {
  Bytes b = {0x00, 0xab, 0xff};
  EXPECT_EQ(to_hex(b), "00abff");
  EXPECT_EQ(from_hex("00ABff"), b);
  EXPECT_THROW(from_hex("0g"), Error);
}

TEST(PackageJsonTest, MissingFileIsIoError) {
  try {
    load_package_file(kDataDir / "packages" / "no-such-file.json");
    FAIL() << "expected an I/O error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIo);
  }
}

}  // namespace
}  // namespace pdm::package
