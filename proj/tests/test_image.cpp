#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "nmistego/image.hpp"

#include "test_util.hpp"

using namespace nmistego;

namespace {

std::vector<uint8_t> bytes_of(const std::string& header, std::vector<uint8_t> raster) {
    std::vector<uint8_t> out(header.begin(), header.end());
    out.insert(out.end(), raster.begin(), raster.end());
    return out;
}

} // namespace

TEST_CASE("GrayImage validates its invariants") {
    CHECK_THROWS_AS(GrayImage(2, 2, {1, 2, 3}), Error);
    CHECK_THROWS_AS(GrayImage(0, 1, {}), Error);
    const GrayImage img(2, 2, {152, 161, 185, 188});
    CHECK(img.at(0, 1) == 161);
    CHECK(img.at(1, 0) == 185);
    CHECK(img.pixel_count() == 4);
}

TEST_CASE("load_pgm parses the reference 2x2 image") {
    const auto img = load_pgm(bytes_of("P5\n2 2\n255\n", {152, 161, 185, 188}));
    CHECK(img == testutil::ref_original());
}

TEST_CASE("load_pgm accepts header variations") {
    const auto img = load_pgm(bytes_of("P5 # comment\n # more\n 2\t2\n255 ",
                                       {1, 2, 3, 4}));
    CHECK(img.width() == 2);
    CHECK(img.height() == 2);
    CHECK(img.at(1, 1) == 4);

    // maxval below 255 is legal and samples are not rescaled
    const auto low = load_pgm(bytes_of("P5\n1 1\n100\n", {77}));
    CHECK(low.at(0, 0) == 77);
}

TEST_CASE("load_pgm single pixel") {
    const auto img = load_pgm(bytes_of("P5\n1 1\n255\n", {0}));
    CHECK(img.width() == 1);
    CHECK(img.at(0, 0) == 0);
}

TEST_CASE("load_pgm rejects malformed input with distinct errors") {
    auto code_of = [](std::vector<uint8_t> bytes) {
        try {
            load_pgm(bytes);
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode(0);
    };
    // truncated raster: 3 bytes for a 2x2 image
    CHECK(code_of(bytes_of("P5\n2 2\n255\n", {1, 2, 3})) == ErrorCode::io);
    // bad magic
    CHECK(code_of(bytes_of("P2\n2 2\n255\n", {1, 2, 3, 4})) == ErrorCode::bad_image);
    // maxval too large
    CHECK(code_of(bytes_of("P5\n2 2\n65535\n", {1, 2, 3, 4})) == ErrorCode::bad_image);
    // zero dimension
    CHECK(code_of(bytes_of("P5\n0 2\n255\n", {})) == ErrorCode::bad_image);
    // header cut short
    CHECK(code_of(bytes_of("P5\n2", {})) == ErrorCode::bad_image);
}

TEST_CASE("save_pgm emits the canonical header") {
    const auto bytes = save_pgm(load_pgm(bytes_of("P5\n1 1\n255\n", {0xff})));
    const std::string expected = "P5\n1 1\n255\n";
    REQUIRE(bytes.size() == expected.size() + 1);
    CHECK(std::string(bytes.begin(), bytes.begin() + expected.size()) == expected);
    CHECK(bytes.back() == 0xff);
}

TEST_CASE("pgm round trip is the identity and canonicalization is idempotent") {
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 50; ++iter) {
        const auto img = testutil::random_image(rng, 1 + uint32_t(rng() % 9),
                                                1 + uint32_t(rng() % 9));
        const auto bytes = save_pgm(img);
        CHECK(load_pgm(bytes) == img);
        CHECK(save_pgm(load_pgm(bytes)) == bytes);
    }
    // a non-canonical header becomes canonical after one pass
    const auto odd = bytes_of("P5  2   2  255 ", {5, 6, 7, 8});
    const auto once = save_pgm(load_pgm(odd));
    CHECK(save_pgm(load_pgm(once)) == once);
}

TEST_CASE("downscale_half subsamples even coordinates") {
    CHECK(downscale_half(testutil::ref_original()) ==
          GrayImage(1, 1, {152}));

    // 4x4 with v(i,j) = 16i + j
    std::vector<uint8_t> v;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) v.push_back(uint8_t(16 * i + j));
    CHECK(downscale_half(GrayImage(4, 4, std::move(v))) ==
          testutil::image_from({{0, 2}, {32, 34}}));

    CHECK(downscale_half(GrayImage::filled(512, 512, 7)) ==
          GrayImage::filled(256, 256, 7));

    CHECK_THROWS_AS(downscale_half(GrayImage(1, 2, {0, 0})), Error);
    CHECK_THROWS_AS(downscale_half(GrayImage(2, 1, {0, 0})), Error);
}

TEST_CASE("downscale_half never invents sample values") {
    std::mt19937_64 rng(11);
    for (int iter = 0; iter < 20; ++iter) {
        const auto img = testutil::random_image(rng, 2 + uint32_t(rng() % 14),
                                                2 + uint32_t(rng() % 14));
        const auto half = downscale_half(img);
        CHECK(half.width() == img.width() / 2);
        CHECK(half.height() == img.height() / 2);
        for (uint32_t i = 0; i < half.height(); ++i)
            for (uint32_t j = 0; j < half.width(); ++j)
                CHECK(half.at(i, j) == img.at(2 * i, 2 * j));
    }
}

TEST_CASE("crop takes the top-left sub-image") {
    const auto cover = testutil::ref_cover();
    CHECK(crop(cover, 3, 3) == cover);
    CHECK(crop(cover, 2, 2) == testutil::image_from({{152, 156}, {168, 158}}));
    CHECK_THROWS_AS(crop(cover, 4, 3), Error);
    CHECK_THROWS_AS(crop(cover, 3, 4), Error);
}

TEST_CASE("file io round trips and reports missing files") {
    const auto img = testutil::ref_original();
    const auto path = std::filesystem::temp_directory_path() / "nmistego_io_test.pgm";
    write_pgm_file(img, path);
    CHECK(read_pgm_file(path) == img);
    std::filesystem::remove(path);
    try {
        read_pgm_file(path);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::io);
    }
}
