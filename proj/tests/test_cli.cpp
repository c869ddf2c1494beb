#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>
#include <unistd.h>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string command = std::string(MIGS_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buffer[4096];
  std::size_t got = 0;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) r.out.append(buffer, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::filesystem::path scratch_dir() {
  auto dir = std::filesystem::temp_directory_path() / ("migs_cli_test_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  return dir;
}

int count_lines(const std::string& s) {
  int n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

}  // namespace

TEST_CASE("lemma") {
  const Run a = run("lemma --i 1 --n 8");
  CHECK(a.code == 0);
  CHECK(a.out.find("(3^2,2)") != std::string::npos);
  CHECK(a.out.find("missing partial sums: 1 4 7") != std::string::npos);
  const Run b = run("lemma --i 2 --n 11 --json");
  CHECK(b.code == 0);
  const auto doc = nlohmann::json::parse(b.out);
  CHECK(doc["partition"] == "4,3^2,1");
  CHECK(doc["missing"] == nlohmann::json::array({2, 9}));
  CHECK(run("lemma --i 5 --n 14").code == 2);
  CHECK(run("lemma --n 14").code == 2);
  CHECK(run("").code == 2);
  CHECK(run("nonsense").code == 2);
}

TEST_CASE("construct and verify") {
  const auto dir = scratch_dir();
  const auto file = (dir / "family.json").string();
  const Run c = run("construct --n 11 --json -o " + file);
  CHECK(c.code == 0);
  CHECK(run("verify " + file).code == 0);
  const Run human = run("construct --n 11");
  CHECK(human.code == 0);
  CHECK(human.out.find("3 members") != std::string::npos);

  std::ifstream in(file);
  std::stringstream text;
  text << in.rdbuf();
  std::string doc = text.str();
  const std::string from = "\"9,1^2\"";
  for (auto pos = doc.find(from); pos != std::string::npos; pos = doc.find(from)) doc.replace(pos, from.size(), "\"10,1\"");
  const auto tampered = (dir / "tampered.json").string();
  std::ofstream(tampered) << doc;
  const Run v = run("verify --json " + tampered);
  CHECK(v.code == 1);
  const auto report = nlohmann::json::parse(v.out);
  CHECK_FALSE(report["checks"]["property2"]["passed"].get<bool>());

  const auto garbage = (dir / "garbage.json").string();
  std::ofstream(garbage) << "not json";
  CHECK(run("verify " + garbage).code == 2);
  CHECK(run("verify " + (dir / "missing.json").string()).code == 2);

  const Run five = run("construct --n 5 --json");
  CHECK(five.code == 0);
  CHECK(nlohmann::json::parse(five.out)["members"].size() == 2);
  // Round trip across the range.
  for (int n : {7, 13, 15, 40, 96}) {
    const auto path = (dir / ("x" + std::to_string(n) + ".json")).string();
    CHECK(run("construct --json --n " + std::to_string(n) + " -o " + path).code == 0);
    CHECK(run("verify " + path).code == 0);
  }
  std::filesystem::remove_all(dir);
}

TEST_CASE("search") {
  const Run s = run("search --n 6 --json");
  CHECK(s.code == 0);
  CHECK(nlohmann::json::parse(s.out)["t_max"] == 2);
  const Run range = run("search --from 5 --to 12 --threads 2");
  CHECK(range.code == 0);
  CHECK(count_lines(range.out) == 9);
  const Run d = run("search --n 9 --variant descriptors --json");
  CHECK(d.code == 0);
  CHECK(nlohmann::json::parse(d.out)["t_max"].get<int>() >= 3);
  CHECK(run("search --n 6 --variant other").code == 2);
  CHECK(run("search --from 9 --to 5").code == 2);
  CHECK(run("search --n 50").code == 2);
  CHECK(run("search --n 8 --threads 0").code == 2);
  CHECK(run("search --n 20 --no-incumbent").out == run("search --n 20").out);
}

TEST_CASE("bounds") {
  const Run b = run("bounds --from 5 --to 100");
  CHECK(b.code == 0);
  CHECK(count_lines(b.out) == 97);
  const Run one = run("bounds --n 22");
  CHECK(one.out.find("M_22.2:21") != std::string::npos);
  CHECK(run("bounds --n 10 --include-k1").out.find("\t2\t") != std::string::npos);
}

TEST_CASE("oracle") {
  const Run o = run("oracle --n 6 --classes \"(2);(3,3);(5,1)\"");
  CHECK(o.code == 0);
  CHECK(o.out.find("MIG-set") != std::string::npos);
  CHECK(o.out.find("PGL_2(5)") != std::string::npos);
  const Run j = run("oracle --n 6 --json --classes \"(5);(2,2,2)\"");
  const auto doc = nlohmann::json::parse(j.out);
  CHECK_FALSE(doc["invariably_generates"].get<bool>());
  CHECK(doc["overgroup"] == "PGL_2(5)");

  const auto dir = scratch_dir();
  const auto list = (dir / "classes.txt").string();
  std::ofstream(list) << "# x\n9,1,1\n4,3,2,2\n4,3,3,1\n";
  const Run f = run("oracle --n 11 --json --classes-file " + list + " --dataset " + MIGS_DATASET_PATH);
  CHECK(f.code == 0);
  CHECK(nlohmann::json::parse(f.out)["is_mig"].get<bool>());
  CHECK(run("oracle --n 13 --classes \"(2)\"").code == 2);
  CHECK(run("oracle --n 6").code == 2);
  CHECK(run("oracle --n 6 --classes \"(7)\"").code == 2);
  std::filesystem::remove_all(dir);
}
