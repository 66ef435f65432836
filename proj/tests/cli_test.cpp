// Copyright 2026 The AEE Authors.
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

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

struct Result {
  int code = -1;
  std::string out;
};

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("aee-cli-" + std::to_string(::getpid()) + "-" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  Result aee(const std::string& args) {
    const std::string cmd =
        "cd '" + dir_.string() + "' && '" AEE_CLI_PATH "' " + args + " 2>stderr.txt";
    Result r;
    FILE* p = ::popen(cmd.c_str(), "r");
    if (p == nullptr) return r;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = std::fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
    const int status = ::pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
  }

  std::string read(const std::string& name) {
    std::ifstream in(dir_ / name, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }
  void write(const std::string& name, const std::string& data) {
    std::ofstream(dir_ / name, std::ios::binary) << data;
  }

  void enroll(const std::string& id) {
    ASSERT_EQ(aee("ukg --gpk gpk --usk " + id + ".usk").code, 0);
    ASSERT_EQ(aee("join-start --gpk gpk --usk " + id + ".usk --out " + id + ".req").code, 0);
    ASSERT_EQ(aee("issue --gpk gpk --mik mik --reg reg --id " + id + " --in " + id +
                  ".req --out " + id + ".resp")
                  .code,
              0);
    ASSERT_EQ(aee("join-finish --gpk gpk --usk " + id + ".usk --in " + id + ".resp --gsk " +
                  id + ".gsk")
                  .code,
              0);
  }

  fs::path dir_;
};

TEST_F(CliTest, FullLifecycleFromFiles) {
  ASSERT_EQ(aee("setup --gpk gpk --mik mik --mok mok --reg reg").code, 0);
  enroll("alice");
  enroll("bob");

  const std::string et = "--et 'junction-1||20170301100000'";
  ASSERT_EQ(aee("gsign --gpk gpk --gsk alice.gsk " + et + " --msg hello --out a1.sig").code, 0);
  ASSERT_EQ(aee("gsign --gpk gpk --gsk alice.gsk " + et + " --msg again --out a2.sig").code, 0);
  ASSERT_EQ(aee("gsign --gpk gpk --gsk bob.gsk " + et + " --msg hello --out b1.sig").code, 0);

  Result v = aee("gver --gpk gpk " + et + " --msg hello --sig a1.sig --epk-out a.epk");
  EXPECT_EQ(v.code, 0);
  EXPECT_EQ(v.out, "accept\n");
  EXPECT_EQ(aee("gver --gpk gpk " + et + " --msg hellO --sig a1.sig").code, 1);
  EXPECT_EQ(aee("gver --gpk gpk --et other --msg hello --sig a1.sig").code, 1);

  ASSERT_EQ(aee("esign --usk alice.usk " + et + " --epk a.epk --msg cam-1 --out a.esig").code, 0);
  EXPECT_EQ(aee("ever " + et + " --epk a.epk --msg cam-1 --esig a.esig").code, 0);
  EXPECT_EQ(aee("ever " + et + " --epk a.epk --msg cam-2 --esig a.esig").code, 1);
  // epk taken straight from the group signature
  EXPECT_EQ(aee("ever --gpk gpk " + et + " --sig a1.sig --msg cam-1 --esig a.esig").code, 0);
  EXPECT_EQ(aee("ever --gpk gpk " + et + " --sig b1.sig --msg cam-1 --esig a.esig").code, 1);

  Result l = aee("link " + et + " --sig a1.sig --sig a2.sig");
  EXPECT_EQ(l.code, 0);
  EXPECT_EQ(l.out, "linked\n");
  EXPECT_EQ(aee("link " + et + " --sig a1.sig --sig b1.sig").code, 1);

  Result o = aee("open --gpk gpk --mok mok --reg reg " + et + " --msg hello --sig b1.sig --proof b1.proof");
  EXPECT_EQ(o.code, 0);
  EXPECT_EQ(o.out, "bob\n");
  EXPECT_EQ(aee("judge --gpk gpk --reg reg --id bob --sig b1.sig --proof b1.proof").code, 0);
  EXPECT_EQ(aee("judge --gpk gpk --reg reg --id alice --sig b1.sig --proof b1.proof").code, 1);
  EXPECT_EQ(aee("judge --gpk gpk --reg reg --id bob --sig a1.sig --proof b1.proof").code, 1);
}

TEST_F(CliTest, TamperedSignatureFileRejected) {
  ASSERT_EQ(aee("setup --gpk gpk --mik mik --mok mok --reg reg").code, 0);
  enroll("a");
  ASSERT_EQ(aee("gsign --gpk gpk --gsk a.gsk --et e --msg m --out s").code, 0);
  const std::string hex = read("s");
  for (std::size_t pos : {10u, 100u, 200u, 400u, 600u}) {
    ASSERT_LT(pos, hex.size() - 1);
    std::string bad = hex;
    bad[pos] = bad[pos] == '0' ? '1' : '0';
    write("bad", bad);
    EXPECT_EQ(aee("gver --gpk gpk --et e --msg m --sig bad").code, 1) << pos;
  }
}

TEST_F(CliTest, BinaryModeAndAutoDetection) {
  ASSERT_EQ(aee("setup --gpk gpk --mik mik --mok mok --reg reg --mode bin").code, 0);
  ASSERT_EQ(aee("ukg --gpk gpk --usk u").code, 0);
  ASSERT_EQ(aee("join-start --gpk gpk --usk u --out req --mode bin").code, 0);
  ASSERT_EQ(aee("issue --gpk gpk --mik mik --reg reg --id v --in req --out resp").code, 0);
  ASSERT_EQ(aee("join-finish --gpk gpk --usk u --in resp --gsk k --mode bin").code, 0);
  ASSERT_EQ(aee("gsign --gpk gpk --gsk k --et e --msg m --out s.bin --mode bin").code, 0);
  ASSERT_EQ(aee("gsign --gpk gpk --gsk k --et e --msg m --out s.hex").code, 0);
  // Framing byte plus the 304-byte compressed signature.
  EXPECT_EQ(read("s.bin").size(), 305u);
  EXPECT_EQ(read("s.hex").size(), 2 * 305u + 1);
  EXPECT_EQ(aee("gver --gpk gpk --et e --msg m --sig s.bin").code, 0);
  EXPECT_EQ(aee("gver --gpk gpk --et e --msg m --sig s.hex").code, 0);
}

TEST_F(CliTest, MessageFromFile) {
  ASSERT_EQ(aee("setup --gpk gpk --mik mik --mok mok --reg reg").code, 0);
  enroll("a");
  write("payload.bin", std::string("\0\1\2binary", 9));
  ASSERT_EQ(aee("gsign --gpk gpk --gsk a.gsk --et e --msg @payload.bin --out s").code, 0);
  EXPECT_EQ(aee("gver --gpk gpk --et e --msg @payload.bin --sig s").code, 0);
  EXPECT_EQ(aee("gver --gpk gpk --et e --msg payload.bin --sig s").code, 1);
}

TEST_F(CliTest, OperationalErrorsExitTwo) {
  EXPECT_EQ(aee("gver --gpk missing --et e --sig missing").code, 2);
  EXPECT_EQ(aee("frobnicate").code, 2);
  EXPECT_EQ(aee("gsign --gpk gpk").code, 2);
  ASSERT_EQ(aee("setup --gpk gpk --mik mik --mok mok --reg reg").code, 0);
  enroll("a");
  // Same member twice.
  EXPECT_EQ(aee("issue --gpk gpk --mik mik --reg reg --id a --in a.req --out x").code, 2);
  // A key file presented as a signature does not decode: reject.
  EXPECT_EQ(aee("gver --gpk gpk --et e --sig gpk").code, 1);
  EXPECT_EQ(aee("bench --iters 10").code, 2);
  EXPECT_EQ(aee("judge --gpk gpk --reg reg --id nobody --sig x --proof x").code, 2);
  const std::string err = read("stderr.txt");
  EXPECT_EQ(err.find("terminate"), std::string::npos);
}

TEST_F(CliTest, UntraceableIsReject) {
  ASSERT_EQ(aee("setup --gpk gpk --mik mik --mok mok --reg reg").code, 0);
  enroll("a");
  ASSERT_EQ(aee("gsign --gpk gpk --gsk a.gsk --et e --msg m --out s").code, 0);
  ASSERT_EQ(aee("setup --gpk g2 --mik m2 --mok o2 --reg empty").code, 0);
  Result r = aee("open --gpk gpk --mok mok --reg empty --et e --msg m --sig s");
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "untraceable\n");
}

TEST_F(CliTest, Precompute) {
  ASSERT_EQ(aee("setup --gpk gpk --mik mik --mok mok --reg reg").code, 0);
  enroll("a");
  EXPECT_EQ(aee("precompute --gpk gpk --gsk a.gsk --slots 6 --start 201703011000 --out day").code, 0);
  EXPECT_EQ(aee("precompute --gpk gpk --gsk a.gsk --et x --et y --out two").code, 0);
  EXPECT_EQ(aee("precompute --gpk gpk --gsk a.gsk --et x --et x --out dup").code, 2);
  EXPECT_EQ(aee("precompute --gpk gpk --gsk a.gsk --out none").code, 2);
}

TEST_F(CliTest, BenchReportsRowsAndSizes) {
  Result r = aee("bench --iters 100 --members 200");
  ASSERT_EQ(r.code, 0);
  for (const char* row : {"GSign", "GVer", "ESign", "EVer", "Link", "Open", "d224", "+140",
                          "+77", "+8", "308", "227", "56"}) {
    EXPECT_NE(r.out.find(row), std::string::npos) << row;
  }
}

TEST_F(CliTest, SimWritesReportAndCsv) {
  write("run.conf",
        "scenario = cam\nvehicles = 2\nduration = 2\ncam_interval = 0.5\nevent_slot = 1\n"
        "attacker_credentials = 1\nattacker_identities = 2\n");
  ASSERT_EQ(aee("sim --config run.conf --out report.txt --csv report.csv").code, 0);
  ASSERT_EQ(aee("sim --config run.conf --out again.txt").code, 0);
  EXPECT_EQ(read("report.txt"), read("again.txt"));
  EXPECT_NE(read("report.txt").find("attacker_events_detected = 2"), std::string::npos);
  EXPECT_EQ(read("report.csv").rfind("section,key,value\n", 0), 0u);
  write("bad.conf", "vehicles = 2\nwheels = 4\n");
  EXPECT_EQ(aee("sim --config bad.conf").code, 2);
}

}  // namespace
