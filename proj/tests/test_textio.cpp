#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <pats/errors.hpp>
#include <pats/textio.hpp>

#include <sstream>

using namespace pats;

TEST_CASE("token escaping") {
    CHECK(escape_token("plain") == "plain");
    CHECK(escape_token("a b") == "a%20b");
    CHECK(escape_token("x=1") == "x%3d1");
    CHECK(escape_token("50%") == "50%25");
    for (std::string s : {"", "a b\tc\nd", "%%==", "pair(h@1_2,c)", "%2"}) {
        CHECK(unescape_token(escape_token(s)) == s);
    }
}

TEST_CASE("pattern round trip") {
    Pattern p = Pattern::dense(3, 2, {"a", "b c", "a", "d=e", "b c", "d=e"});
    std::stringstream ss;
    write_pattern(ss, p);
    CHECK(read_pattern(ss) == p);
}

TEST_CASE("pattern text layout is top row first") {
    Pattern p = Pattern::dense(2, 2, {"bl", "br", "tl", "tr"});
    std::stringstream ss;
    write_pattern(ss, p);
    CHECK(ss.str() == "pattern 2 2\ntl tr\nbl br\n");
}

TEST_CASE("pattern parse errors") {
    auto expect_parse_error = [](const std::string& text) {
        std::stringstream ss(text);
        try {
            read_pattern(ss);
            FAIL("expected parse error for: " << text);
        } catch (const Error& e) {
            CHECK(e.code == Errc::Parse);
        }
    };
    expect_parse_error("bogus 2 2\na b\nc d\n");
    expect_parse_error("pattern 2\na b\n");
    expect_parse_error("pattern 2 2\na\nc d\n");
    expect_parse_error("pattern 2 2\na b\n");
    expect_parse_error("pattern 0 2\n");
}

TEST_CASE("tileset round trip") {
    TileSet t;
    t.tiles = {{"or gate", "A", "1", "0 1", "bu%l"}, {"x", "n", "e", "s", "w"}};
    t.seed.north = {"g1", "g 2"};
    t.seed.east = {"e1"};
    std::stringstream ss;
    write_tileset(ss, t);
    TileSet u = read_tileset(ss);
    CHECK(u.tiles == t.tiles);
    CHECK(u.seed.north == t.seed.north);
    CHECK(u.seed.east == t.seed.east);
}

TEST_CASE("tileset parse errors") {
    auto expect_parse_error = [](const std::string& text) {
        std::stringstream ss(text);
        try {
            read_tileset(ss);
            FAIL("expected parse error for: " << text);
        } catch (const Error& e) {
            CHECK(e.code == Errc::Parse);
        }
    };
    expect_parse_error("pattern 1 1\na\n");
    expect_parse_error("tileset\ntile c N=a E=b S=c\n");
    expect_parse_error("tileset\ntile c N=a E=b S=c X=d\n");
    expect_parse_error("tileset\nseed sideways a b\n");
    expect_parse_error("tileset\nfrobnicate\n");
}

TEST_CASE("file io") {
    Pattern p = Pattern::dense(1, 1, {"solo"});
    save_pattern("/tmp/pats_textio_test.pat", p);
    CHECK(load_pattern("/tmp/pats_textio_test.pat") == p);
    CHECK_THROWS_AS(load_pattern("/nonexistent/nowhere.pat"), Error);
    try {
        load_pattern("/nonexistent/nowhere.pat");
    } catch (const Error& e) {
        CHECK(e.code == Errc::Io);
    }
}
