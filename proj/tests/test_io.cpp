#include <gtest/gtest.h>

#include <sstream>
#include <string>

#include "h2s/io.hpp"
#include "h2s/random.hpp"
#include "h2s/reduction.hpp"
#include "h2s/selftest.hpp"

using namespace h2s;

namespace {

Graph graph_from(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in, "g");
}

H2SInstance instance_from(const std::string& text) {
    std::istringstream in(text);
    return parse_instance(in, "i");
}

std::size_t error_line(const std::function<void()>& f) {
    try {
        f();
    } catch (const FormatError& e) {
        return e.line();
    }
    ADD_FAILURE() << "expected FormatError";
    return 0;
}

std::string to_text(const H2SInstance& inst) {
    std::ostringstream out;
    write_instance(out, inst);
    return out.str();
}

}  // namespace

TEST(GraphFile, ParsesTriangle) { EXPECT_EQ(graph_from("3 3\n0 1\n0 2\n1 2"), selftest::triangle()); }

TEST(GraphFile, RejectsBadLinesWithLineNumbers) {
    EXPECT_EQ(error_line([] { graph_from("3 2\n0 1\n1 1\n"); }), 3U);
    EXPECT_EQ(error_line([] { graph_from("3 2\n0 1\n1 0\n"); }), 3U);
    EXPECT_EQ(error_line([] { graph_from("3 1\n0 5\n"); }), 2U);
    EXPECT_EQ(error_line([] { graph_from("3 1\n0 x\n"); }), 2U);
    EXPECT_EQ(error_line([] { graph_from("3 2\n0 1\n"); }), 3U);
    EXPECT_EQ(error_line([] { graph_from("3 1\n0 1\n1 2\n"); }), 3U);
    EXPECT_EQ(error_line([] { graph_from("3\n"); }), 1U);
}

TEST(GraphFile, RoundTrip) {
    Rng rng(83);
    for (int t = 0; t < 20; ++t) {
        const auto g = selftest::random_graph(rng, uniform_int(rng, 1, 9), 0.5);
        std::ostringstream out;
        write_graph(out, g);
        EXPECT_EQ(graph_from(out.str()), g);
    }
}

TEST(InstanceFile, ParsesSigns) {
    const auto inst = instance_from("2 2\n++\n--\n");
    EXPECT_EQ(inst.size(), 2U);
    EXPECT_EQ(inst.dim(), 2U);
    EXPECT_EQ(inst[1].to_string(), "--");
}

TEST(InstanceFile, ParsesBinaryHeader) {
    const auto inst = instance_from("binary 2 3\n101\n010\n");
    EXPECT_EQ(inst[0].to_string(), "+-+");
    EXPECT_EQ(inst[1].to_string(), "-+-");
    EXPECT_EQ(to_text(inst), "2 3\n+-+\n-+-\n");
}

TEST(InstanceFile, RejectsMalformedRows) {
    EXPECT_EQ(error_line([] { instance_from("2 2\n+-\n+"); }), 3U);
    EXPECT_EQ(error_line([] { instance_from("2 2\n+-\n+1\n"); }), 3U);
    EXPECT_EQ(error_line([] { instance_from("binary 1 2\n+-\n"); }), 2U);
    EXPECT_EQ(error_line([] { instance_from("2 2\n+-\n"); }), 3U);
    EXPECT_EQ(error_line([] { instance_from("1 2\n+-\n--\n"); }), 3U);
    EXPECT_EQ(error_line([] { instance_from("0 2\n"); }), 1U);
    EXPECT_EQ(error_line([] { instance_from("# only a comment\n"); }), 2U);
}

TEST(InstanceFile, CanonicalTextRoundTripsByteForByte) {
    Rng rng(89);
    for (int t = 0; t < 20; ++t) {
        const auto inst = random_instance(rng, uniform_int(rng, 1, 12), uniform_int(rng, 1, 12));
        const auto text = to_text(inst);
        const auto back = instance_from(text);
        EXPECT_EQ(back, inst);
        EXPECT_EQ(to_text(back), text);
    }
}

TEST(InstanceFile, ReductionMetadataSurvivesRoundTrip) {
    const auto inst = reduce_graph(orient_edges(selftest::triangle()), ReductionParams(4));
    const auto text = to_text(inst);
    EXPECT_EQ(text.rfind("#meta block_size 4\n", 0), 0U);
    const auto back = instance_from(text);
    EXPECT_EQ(back, inst);
    ASSERT_TRUE(back.block_meta());
    EXPECT_EQ(*back.block_meta(), *inst.block_meta());
    EXPECT_EQ(to_text(back), text);
}

TEST(InstanceFile, InconsistentMetadataIsAFormatError) {
    EXPECT_THROW(instance_from("#meta block_size 4\n#meta edge_blocks 0\n1 2\n++\n"), FormatError);
    EXPECT_THROW(instance_from("#meta colour red\n1 1\n+\n"), FormatError);
}

TEST(InstanceFile, PlainCommentsAreIgnored) {
    const auto inst = instance_from("# toy\n2 1\n+\n# middle\n-\n");
    EXPECT_EQ(inst.size(), 2U);
    EXPECT_FALSE(inst.block_meta());
}

TEST(Files, LoadAndSave) {
    const auto inst = load_instance(std::string(H2S_DATA_DIR) + "/toy.h2s");
    EXPECT_EQ(inst.size(), 3U);
    const auto g = load_graph(std::string(H2S_DATA_DIR) + "/triangle.g");
    EXPECT_EQ(g, selftest::triangle());

    const auto path = ::testing::TempDir() + "h2s_io_roundtrip.h2s";
    save_instance(inst, path);
    EXPECT_EQ(load_instance(path), inst);
    EXPECT_THROW(load_graph("/nonexistent/graph.g"), FormatError);
}
