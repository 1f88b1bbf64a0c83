#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = qmzv::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("bracket output matches the golden file") {
    const auto r = run({"bracket", "--k", "2", "--d", "0", "--order", "6", "--json"});
    CHECK(r.code == 0);
    CHECK(r.out == slurp(std::filesystem::path(QMZV_GOLDEN_DIR) / "bracket_k2_d0_order6.json"));
  }

  TEST_CASE("repeated runs are byte identical") {
    const std::vector<std::string> args{"formal", "derive", "--weight", "6", "--target", "ramanujan4", "--json"};
    const auto a = run(args);
    const auto b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    const auto j = nlohmann::ordered_json::parse(a.out);
    CHECK(j["status"] == "ok");
  }

  TEST_CASE("exit codes") {
    CHECK(run({"verify", "shuffle", "--k1", "2", "--k2", "3", "--order", "20"}).code == 0);
    CHECK(run({"verify", "betadsh", "--degree", "6"}).code == 0);
    CHECK(run({"formal", "derive", "--weight", "4", "--target", "cor1", "--printed-sign"}).code == 1);
    CHECK(run({"bracket", "--k", "x"}).code == 2);
    CHECK(run({"bracket"}).code == 2);
    CHECK(run({"nonsense"}).code == 2);
    CHECK(run({"formal", "derive", "--weight", "4", "--target", "nope"}).code == 2);
    CHECK(run({"bracket", "--k", "0"}).code == 2);
    const auto r = run({"bracket", "--k", "x"});
    CHECK(r.err.find("error:") != std::string::npos);
    CHECK(r.out.empty());
  }

  TEST_CASE("text output") {
    const auto r = run({"bracket", "--k", "2", "--order", "4"});
    CHECK(r.code == 0);
    CHECK(r.out.find("status: ok") != std::string::npos);
    CHECK(r.out.find("config.command: bracket") != std::string::npos);
  }

  TEST_CASE("--out writes to a file") {
    const auto path = std::filesystem::temp_directory_path() / "qmzv_cli_out_test.json";
    std::filesystem::remove(path);
    const auto r = run({"realize", "--symbol", "P(4,4,0,0)", "--order", "5", "--degree", "6", "--json", "--out", path.string()});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    const auto j = nlohmann::ordered_json::parse(slurp(path));
    CHECK(j["status"] == "ok");
    std::filesystem::remove(path);
  }
}
