#include <gtest/gtest.h>

#include <tropic/report.hpp>
#include <tropic/errors.hpp>

namespace tropic {
namespace {

ReportDocument sample() {
  ReportDocument doc;
  doc.add("command", std::string("general"));
  doc.add("complete", true);
  doc.add("principal", TokenList{"1", "-inf", "*"});
  doc.add("free", IndexList{});
  doc.add("kept", IndexList{{1, 3}});
  doc.add("a_hat", TokenGrid{{"2", "-inf"}, {"-inf", "3"}});
  doc.add("row", TokenGrid{{"1", "2"}});
  doc.add("box", BoxEntry{IndexList{{2}}, {"<=1", "=1", "<=1"}});
  doc.add("box", BoxEntry{IndexList{{1, 3}}, {"=1", "<=1", "=1"}});
  return doc;
}

TEST(Report, TextLayout) {
  EXPECT_EQ(write_text(sample()),
            "command: general\n"
            "complete: true\n"
            "principal: [1 -inf *]\n"
            "free: {}\n"
            "kept: {1,3}\n"
            "a_hat: [2 -inf; -inf 3]\n"
            "row: [1 2;]\n"
            "box: {2} [<=1 =1 <=1]\n"
            "box: {1,3} [=1 <=1 =1]\n");
}

TEST(Report, TextRoundTrip) {
  auto doc = sample();
  EXPECT_EQ(read_text(write_text(doc)), doc);
}

TEST(Report, Lookup) {
  auto doc = sample();
  ASSERT_NE(doc.find("complete"), nullptr);
  EXPECT_TRUE(std::get<bool>(*doc.find("complete")));
  EXPECT_EQ(doc.find("missing"), nullptr);
  EXPECT_EQ(doc.find_all("box").size(), 2U);
}

TEST(Report, Json) {
  ReportDocument doc;
  doc.add("command", std::string("general"));
  doc.add("free", IndexList{{2}});
  doc.add("box", BoxEntry{IndexList{{1}}, {"=0"}});
  EXPECT_EQ(write_json(doc),
            "{\n"
            "  \"command\": \"general\",\n"
            "  \"free\": [\n    2\n  ],\n"
            "  \"box\": [\n    {\n      \"index_set\": [\n        1\n      ],\n"
            "      \"components\": [\n        \"=0\"\n      ]\n    }\n  ]\n"
            "}\n");
}

TEST(Report, MalformedText) {
  EXPECT_THROW(read_text("no separator\n"), ParseError);
  EXPECT_THROW(read_text("k: {1,x}\n"), ParseError);
  EXPECT_THROW(read_text("k: [1 2\n"), ParseError);
}

}  // namespace
}  // namespace tropic
