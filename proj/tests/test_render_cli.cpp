#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "windlab/cli.hpp"
#include "windlab/render.hpp"

using namespace windlab;

namespace {

std::size_t count_occurrences(const std::string& haystack, const std::string& needle) {
  std::size_t count = 0, pos = 0;
  while ((pos = haystack.find(needle, pos)) != std::string::npos) {
    ++count;
    pos += needle.size();
  }
  return count;
}

int run_cli(std::initializer_list<const char*> args, std::string* captured = nullptr) {
  std::vector<const char*> argv{"windlab"};
  argv.insert(argv.end(), args.begin(), args.end());
  std::ostringstream out, err;
  int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  if (captured) *captured = out.str() + err.str();
  return code;
}

}  // namespace

TEST_CASE("rendering the commutator square") {
  std::string svg = render_svg(Word::parse("[x,y]"));
  CHECK(count_occurrences(svg, "<polyline") == 1);
  // five vertices -> five coordinate pairs in the points attribute
  auto start = svg.find("points=\"");
  auto end = svg.find('"', start + 8);
  std::string points = svg.substr(start + 8, end - start - 8);
  CHECK(count_occurrences(points, ",") == 5);
  CHECK(svg.find("marker-end") != std::string::npos);
}

TEST_CASE("rendering is deterministic") {
  RenderConfig cfg;
  cfg.show_winding_numbers = true;
  cfg.coloring = InvariantSpec{4, 0, 1, {0, 0}, standard_coloring(0, 4)};
  Word z = Word::parse("x^2 y x^-1 y^-1 x y^3 x^-3 y x y^-4");
  CHECK(render_svg(z, cfg) == render_svg(z, cfg));
}

TEST_CASE("the empty word renders a bare grid") {
  std::string svg = render_svg(Word());
  CHECK(svg.find("<polyline") == std::string::npos);
  CHECK(svg.find("<line") != std::string::npos);
}

TEST_CASE("winding labels match the coefficients") {
  RenderConfig cfg;
  cfg.show_winding_numbers = true;
  std::string svg = render_svg(Word::parse("x^2 y x^-1 y^-1 x y^3 x^-3 y x y^-4"), cfg);
  CHECK(count_occurrences(svg, ">2</text>") == 1);   // the coefficient 2 at (1,0)
  CHECK(count_occurrences(svg, ">-1</text>") == 1);  // the coefficient -1 at (-1,3)
  CHECK(count_occurrences(svg, "</text>") == 7);     // seven nonzero squares
  RenderConfig tiny;
  tiny.cell_px = 2;
  CHECK_THROWS_AS(render_svg(Word(), tiny), std::invalid_argument);
}

TEST_CASE("cli: parse") {
  std::string out;
  CHECK(run_cli({"parse", "[x,y]"}, &out) == 0);
  CHECK(out == "xyx^-1y^-1\n");
  CHECK(run_cli({"parse", "x^"}, &out) == 2);
  CHECK(run_cli({"nonsense"}, &out) == 2);
}

TEST_CASE("cli: winding") {
  std::string out;
  CHECK(run_cli({"winding", "[x,y]"}, &out) == 0);
  CHECK(out == "1\n");
  CHECK(run_cli({"winding", "[x,y]", "--json"}, &out) == 0);
  CHECK(out == "[[0,0,1]]\n");
  CHECK(run_cli({"winding", "xy"}, &out) == 3);
}

TEST_CASE("cli: word problems and exit codes") {
  std::string out;
  CHECK(run_cli({"word-problem", "[x,y]^2", "--group", "m24"}, &out) == 1);
  CHECK(out == "nontrivial\n");
  CHECK(run_cli({"word-problem", "x^4", "--group", "m24", "--method", "normalform"}, &out) ==
        0);
  CHECK(out == "trivial\n");
  CHECK(run_cli({"word-problem", "[x,y]^2", "--group", "n2n", "--n", "4"}, &out) == 0);
  CHECK(run_cli({"word-problem", "[x,y]", "--group", "n2n", "--n", "4"}, &out) == 1);
  CHECK(run_cli({"word-problem", "x", "--group", "niente"}, &out) == 2);
}

TEST_CASE("cli: invariant and omega") {
  std::string out;
  CHECK(run_cli({"invariant", "x^2yx^-1y^-1xy^3x^-3yxy^-4", "--n", "4", "--phi", "0,1",
                 "--coloring", "std:0"},
                &out) == 0);
  CHECK(out == "Lambda = 0 (mod 4)\n");
  CHECK(run_cli({"invariant", "x^4(x^-1y)^4y^-4", "--n", "4", "--phi", "1,1", "--coloring",
                 "pgood:2:0,1,0,3", "--json"},
                &out) == 0);
  CHECK(out.find("\"value\":2") != std::string::npos);
  // Omega of the piece 1: h^0 = 1 (row 0 black under c_0), h^1 = 3 (white
  // under c_1), same for the columns
  CHECK(run_cli({"omega", "xyx^-1y^-1", "--n", "4"}, &out) == 0);
  CHECK(out.find("h = [1,3]") != std::string::npos);
  CHECK(run_cli({"omega", "[x,y]", "--tilde"}, &out) == 0);
  CHECK(out.find("[1,3,1,3,1]") != std::string::npos);
  CHECK(run_cli({"omega", "[x,y]", "--n", "6"}, &out) == 3);
}

TEST_CASE("cli: image orders, bounds, quotient, identity") {
  std::string out;
  CHECK(run_cli({"image-order", "--target", "omega", "--n", "4", "--json"}, &out) == 0);
  CHECK(out.find("\"order\":\"32\"") != std::string::npos);
  CHECK(out.find("\"order_factored\":\"2^5\"") != std::string::npos);
  CHECK(run_cli({"bounds", "--d", "2", "--n", "16", "--json"}, &out) == 0);
  CHECK(out.find("published_range") != std::string::npos);
  CHECK(run_cli({"quotient", "--n", "4", "--json"}, &out) == 0);
  CHECK(out.find("\"order\":\"64\"") != std::string::npos);
  CHECK(out.find("\"order_factored\":\"2^6\"") != std::string::npos);
  CHECK(run_cli({"quotient", "--n", "16"}, &out) == 2);  // needs --large
  CHECK(run_cli({"identity", "--family", "morse", "--n", "4", "--json"}, &out) == 0);
  CHECK(out.find("\"h0_minus_h1\":2") != std::string::npos);
  CHECK(run_cli({"identity", "--family", "engel", "--n", "8", "--json"}, &out) == 0);
  CHECK(out.find("\"first_vanishing_engel_index\":10") != std::string::npos);
}

TEST_CASE("cli: quotient with a relator file") {
  const char* path = "test_relators_m24.txt";
  {
    std::ofstream f(path);
    f << "[x,y]^4\n\n";
  }
  std::string out;
  CHECK(run_cli({"quotient", "--n", "4", "--relators", path, "--json"}, &out) == 0);
  CHECK(out.find("\"order\":\"4294967296\"") != std::string::npos);  // 4^16
  std::remove(path);
}

TEST_CASE("cli: render writes a file") {
  const char* path = "test_render_square.svg";
  std::string out;
  CHECK(run_cli({"render", "[x,y]", "-o", path, "--numbers"}, &out) == 0);
  std::ifstream f(path);
  REQUIRE(f.good());
  std::stringstream buffer;
  buffer << f.rdbuf();
  CHECK(buffer.str().find("<svg") != std::string::npos);
  CHECK(buffer.str().find(">1</text>") != std::string::npos);
  std::remove(path);
}

TEST_CASE("cli: exit codes separate usage errors from precondition failures") {
  std::string out;
  // garbled coloring spec: usage (2)
  CHECK(run_cli({"invariant", "[x,y]", "--n", "4", "--phi", "0,1", "--coloring", "xyz"},
                &out) == 2);
  CHECK(run_cli({"invariant", "[x,y]", "--n", "4", "--phi", "zz", "--coloring", "std:0"},
                &out) == 2);
  // well-formed but invalid values: precondition (3)
  CHECK(run_cli({"invariant", "[x,y]", "--n", "4", "--phi", "0,1", "--coloring", "std:7"},
                &out) == 3);
  CHECK(run_cli({"invariant", "[x,y]", "--n", "4", "--phi", "0,1", "--coloring", "bw:BBBW"},
                &out) == 3);
  CHECK(run_cli({"invariant", "[x,y]", "--n", "4", "--phi", "0,1", "--coloring",
                 "pgood:2:0,1,1,3"},
                &out) == 3);
}

TEST_CASE("cli: verify single suite") {
  std::string out;
  CHECK(run_cli({"verify", "--suite", "worked-example"}, &out) == 0);
  CHECK(out.find("[PASS]") != std::string::npos);
  CHECK(run_cli({"verify", "--suite", "no-such-suite"}, &out) == 2);
  CHECK(run_cli({"verify", "--list"}, &out) == 0);
  CHECK(out.find("winding-oracle") != std::string::npos);
}
