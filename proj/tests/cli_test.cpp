#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "surfgeo/catalog.hpp"
#include "surfgeo/cli.hpp"
#include "surfgeo/csv.hpp"
#include "surfgeo/errors.hpp"
#include "surfgeo/homeo.hpp"

using namespace surfgeo;
namespace fs = std::filesystem;

namespace {

struct CliResult {
  int code;
  std::string out, err;
};

CliResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run_command(args, out, err);
  return {code, out.str(), err.str()};
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

// RFC-4180 field splitter for one record without embedded newlines.
std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        fields.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else {
      fields.back() += c;
    }
  }
  return fields;
}

class TempDir : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("surfgeo_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                        "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  fs::path dir_;
};

std::string slurp(const std::string& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST(Csv, FieldQuoting) {
  EXPECT_EQ(csv_field("ci(3;3)"), "ci(3;3)");
  EXPECT_EQ(csv_field("a,b"), "\"a,b\"");
  EXPECT_EQ(csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
}

TEST(Csv, EmptyScanIsHeaderOnly) {
  std::ostringstream out;
  emit_csv({}, out);
  EXPECT_EQ(out.str(), std::string(kGeographyHeader) + "\n");
}

TEST(Csv, KnownRows) {
  PairSearchSpace space;
  space.d_first = 6;
  space.d_last = 6;
  space.complete_intersections = {{3, 3}};
  space.k_first = 1;
  space.k_last = 10;
  space.bidegree_first = 6;
  space.bidegree_last = 12;
  space.include_plane10 = true;
  std::vector<GeographyRow> rows;
  for (const auto& p : find_pairs(space)) rows.push_back(to_row(p));
  std::ostringstream out;
  emit_csv(rows, out);
  std::istringstream lines(out.str());
  std::string header, line;
  std::getline(lines, header);
  EXPECT_EQ(header, kGeographyHeader);
  std::vector<std::vector<std::string>> records;
  while (std::getline(lines, line)) records.push_back(split_csv(line));
  const std::vector<std::string> six{"6", "8", "6", "12", "116", "-72", "21", "93", "true", "horikawa_p1xp1(6,12)"};
  const std::vector<std::string> ci{"ci(3;3)", "3", "", "", "66", "-42", "11", "53", "true", "horikawa_plane10"};
  EXPECT_NE(std::find(records.begin(), records.end(), six), records.end());
  EXPECT_NE(std::find(records.begin(), records.end(), ci), records.end());
  EXPECT_NE(out.str().find("ci(3;3),3,,,66,-42,11,53,true,horikawa_plane10\n"), std::string::npos);
  EXPECT_EQ(out.str().find('\r'), std::string::npos);
}

TEST_F(TempDir, CsvWriteFailureNamesPath) {
  std::string bad = path("missing/dir/out.csv");
  try {
    emit_csv({}, bad);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find(bad), std::string::npos);
  }
}

TEST_F(TempDir, CatalogRoundTrip) {
  std::string file = path("c.catalog");
  {
    Catalog c = Catalog::load(file);
    EXPECT_TRUE(c.entries().empty());
    c.add("two_cubics", "blowup( ci(3, 3) , 3)");
    c.add("decic", "blowup(hypersurface(10),144)");
    c.save();
  }
  Catalog c = Catalog::load(file);
  ASSERT_EQ(c.entries().size(), 2u);
  EXPECT_EQ(c.find("two_cubics")->expr, "blowup(ci(3,3),3)");
  EXPECT_EQ(c.find("decic")->cached.top.euler, 804);
  EXPECT_TRUE(c.cache_current());
  EXPECT_THROW(c.add("decic", "K3"), DomainError);
  EXPECT_THROW(c.add("9lives", "K3"), DomainError);
  EXPECT_THROW(c.add("bad_expr", "K3 #"), ParseError);
}

TEST_F(TempDir, CatalogCacheIsRevalidated) {
  std::string file = path("c.catalog");
  Catalog c = Catalog::load(file);
  c.add("x", "hypersurface(6)");
  c.save();
  std::ofstream(file + ".cache") << "x\t0\t0\t0\t0\t0\n";
  Catalog reloaded = Catalog::load(file);
  EXPECT_FALSE(reloaded.cache_current());
  EXPECT_EQ(reloaded.find("x")->cached.top.euler, 108);
}

TEST_F(TempDir, CatalogErrorsCarryLineNumber) {
  std::string file = path("c.catalog");
  std::ofstream(file) << "# comment\nok = K3\nnot an entry\n";
  try {
    Catalog::load(file);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find(file + ":3"), std::string::npos);
  }
}

TEST(Cli, ObstructDecic) {
  CliResult r = run({"obstruct", "hypersurface(10)", "--blowups", "144"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(first_line(r.out), "obstructed (k=144 ≥ 120 = c₁²/3)");
}

TEST(Cli, ObstructThresholds) {
  CliResult r = run({"obstruct", "hypersurface(6)", "--blowups", "8", "--threshold", "2/3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(first_line(r.out), "not obstructed (k=8 < 16 = 2c₁²/3)");
  r = run({"obstruct", "ci(3,3)", "--blowups", "3"});
  EXPECT_EQ(first_line(r.out), "obstructed (k=3 ≥ 3 = c₁²/3, equality case)");
  r = run({"obstruct", "hypersurface(10)", "--blowups", "158", "--threshold", "25/57"});
  EXPECT_EQ(first_line(r.out), "obstructed (k=158 ≥ 3000/19 = 25c₁²/57)");
  EXPECT_EQ(r.code, 0);
}

TEST(Cli, ObstructErrors) {
  EXPECT_EQ(run({"obstruct", "hypersurface(10)", "--blowups", "1", "--threshold", "1/2"}).code, 2);
  EXPECT_EQ(run({"obstruct", "hypersurface(4)", "--blowups", "1"}).code, 1);
  EXPECT_EQ(run({"obstruct", "K3 # K3", "--blowups", "1"}).code, 1);
  EXPECT_EQ(run({"obstruct", "hypersurface(10)"}).code, 2);
}

TEST(Cli, HomeoTwoCubics) {
  CliResult r = run({"homeo", "blowup(ci(3,3),3)", "horikawa_plane10"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("homeomorphic: 11 CP² # 53 CP̄²\n"), std::string::npos);
}

TEST(Cli, HomeoReportsDiscrepancyNote) {
  CliResult r = run({"homeo", "blowup(hypersurface(10),144)", "horikawa_p1xp1(8,58)"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("homeomorphic: 169 CP² # 633 CP̄²"), std::string::npos);
  EXPECT_NE(r.out.find("129"), std::string::npos);
}

TEST(Cli, HomeoNegativeAndUnclassifiable) {
  CliResult r = run({"homeo", "K3", "3*CP2 # 19*CP2bar"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("not homeomorphic"), std::string::npos);
  EXPECT_EQ(run({"homeo", "T4", "K3"}).code, 1);
}

TEST(Cli, Invariants) {
  CliResult r = run({"invariants", "blowup(hypersurface(6),8)"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("chi               116\n"), std::string::npos);
  EXPECT_NE(r.out.find("tau               -72\n"), std::string::npos);
  EXPECT_NE(r.out.find("c1^2              16\n"), std::string::npos);
  EXPECT_NE(r.out.find("p_g               10\n"), std::string::npos);
  EXPECT_NE(r.out.find("hitchin_thorpe"), std::string::npos);
  CliResult s = run({"invariants", "21*CP2 # 93*CP2bar"});
  EXPECT_NE(s.out.find("p_g               unknown\n"), std::string::npos);
}

TEST(Cli, ParseErrorsExitTwoWithColumn) {
  CliResult r = run({"invariants", "hypersurface()"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("column 14"), std::string::npos);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(run({"--help"}).code, 0); }

TEST(Cli, Sharpness) {
  CliResult r = run({"sharpness", "--p", "3", "--n", "64"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("chi               2560\n"), std::string::npos);
  EXPECT_NE(r.out.find("tau               256\n"), std::string::npos);
  EXPECT_NE(r.out.find("321 (over B), 6 (over C)"), std::string::npos);
  EXPECT_NE(r.out.find("(3 + 9/2ϱ)ε"), std::string::npos);
  EXPECT_NE(r.out.find("(3 - 27/2ϱ)ε"), std::string::npos);
  EXPECT_NE(r.out.find("3ϱε ≥ 9ϱεδ"), std::string::npos);
  EXPECT_NE(r.out.find("for ϱ > 0: δ ≤ 1/3\n"), std::string::npos);
  EXPECT_NE(r.out.find("verified"), std::string::npos);
  EXPECT_EQ(run({"sharpness", "--p", "1", "--n", "4"}).code, 1);
  EXPECT_EQ(run({"sharpness", "--p", "3"}).code, 2);
}

TEST_F(TempDir, PairsToFileAndStdout) {
  std::string file = path("pairs.csv");
  CliResult r = run({"pairs", "--d-range", "5..10", "--k-range", "1..200", "--bidegree-range", "6..60", "--ci", "3,3",
               "--plane10", "--out", file});
  EXPECT_EQ(r.code, 0);
  std::string csv = slurp(file);
  EXPECT_EQ(csv.rfind(kGeographyHeader, 0), 0u);
  EXPECT_NE(csv.find("ci(3;3),3,,,66,-42,11,53,true,horikawa_plane10\n"), std::string::npos);
  CliResult s = run({"pairs", "--d-range", "5..10", "--k-range", "1..200", "--bidegree-range", "6..60", "--ci", "3,3",
               "--plane10", "--threads", "3"});
  EXPECT_EQ(s.out, csv);
  CliResult empty = run({"pairs", "--k-range", "1..5"});
  EXPECT_EQ(empty.out, std::string(kGeographyHeader) + "\n");
  EXPECT_EQ(run({"pairs", "--k-range", "1-5"}).code, 2);
  EXPECT_EQ(run({"pairs", "--k-range", "1..5", "--ci", "3,x"}).code, 2);
}

TEST_F(TempDir, CatalogCommands) {
  std::string file = path("cli.catalog");
  CliResult add = run({"catalog", "--catalog", file, "add", "ex1", "blowup( ci(3,3), 3)"});
  EXPECT_EQ(add.code, 0);
  EXPECT_EQ(add.out, "ex1 = blowup(ci(3,3),3)\n");
  CliResult list = run({"catalog", "--catalog", file, "list"});
  EXPECT_EQ(list.out, "ex1 = blowup(ci(3,3),3)\n");
  CliResult show = run({"catalog", "--catalog", file, "show", "ex1"});
  EXPECT_EQ(show.code, 0);
  EXPECT_NE(show.out.find("expression        blowup(ci(3,3),3)\n"), std::string::npos);
  EXPECT_NE(show.out.find("chi               66\n"), std::string::npos);
  EXPECT_EQ(run({"catalog", "--catalog", file, "show", "nope"}).code, 1);
  EXPECT_EQ(run({"catalog", "--catalog", file, "add", "ex1", "K3"}).code, 1);
  EXPECT_EQ(run({"catalog", "--catalog", file, "add", "ex2", "K3 #"}).code, 2);
}

TEST(Cli, OutputIsDeterministic) {
  const std::vector<std::vector<std::string>> commands{
      {"invariants", "blowup(ci(3,3),3)"},
      {"obstruct", "hypersurface(10)", "--blowups", "144"},
      {"homeo", "blowup(hypersurface(6),8)", "horikawa_p1xp1(6,12)"},
      {"sharpness", "--p", "3", "--n", "64"},
      {"pairs", "--d-range", "5..9", "--k-range", "1..120", "--bidegree-range", "6..60", "--threads", "4"},
  };
  for (const auto& c : commands) {
    CliResult a = run(c), b = run(c);
    EXPECT_EQ(a.code, b.code);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.err, b.err);
  }
}
