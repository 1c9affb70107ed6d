#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "gamelab/params.h"

namespace gamelab {
namespace {

TEST_CASE("key=value assignments") {
  ParamMap p;
  p.set(" n = 3 ");
  p.set("delta", "1/4");
  CHECK(p.get_int("n", 0) == 3);
  CHECK(p.get_rational("delta", Rational(0)) == Rational(1, 4));
  CHECK(p.get_int("missing", 7) == 7);
  CHECK_THROWS_AS(p.set("no equals sign"), std::invalid_argument);
}

TEST_CASE("config text skips comments and later lines win") {
  ParamMap p;
  p.merge_text("# comment\n\nk=1\nk=2\nflag=true\n");
  CHECK(p.get_int("k", 0) == 2);
  CHECK(p.get_bool("flag", false));
  CHECK(p.values().size() == 2);
}

TEST_CASE("malformed values throw") {
  ParamMap p;
  p.set("n", "three");
  p.set("b", "maybe");
  CHECK_THROWS_AS(p.get_int("n", 0), std::invalid_argument);
  CHECK_THROWS_AS(p.get_bool("b", false), std::invalid_argument);
}

TEST_CASE("config files") {
  const std::string path = "params_test_config.txt";
  {
    std::ofstream out(path);
    out << "game_size=4\n";
  }
  ParamMap p;
  p.merge_file(path);
  CHECK(p.get_int("game_size", 0) == 4);
  std::remove(path.c_str());
  CHECK_THROWS(p.merge_file("does/not/exist.txt"));
}

}  // namespace
}  // namespace gamelab
