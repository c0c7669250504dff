// Copyright 2026 The stokesim Authors
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

// End-to-end checks of the command-line tool: spawns the built binary and
// inspects exit codes and emitted files.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

int failures = 0;

#define CHECK_MSG(cond, msg)                                            \
  do {                                                                  \
    if (!(cond)) {                                                      \
      std::cerr << "[FAIL] " << __FILE__ << ":" << __LINE__ << "  "     \
                << msg << "\n";                                         \
      ++failures;                                                       \
    }                                                                   \
  } while (0)

std::string tmp_path(const std::string& name) {
  return std::string("cli_test_") + name;
}

int run(const std::string& args) {
  const std::string cmd = std::string(STOKESIM_CLI_PATH) + " " + args +
                          " > cli_test_stdout.txt 2> cli_test_stderr.txt";
  const int status = std::system(cmd.c_str());
  if (status == -1) return -1;
  return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

long count_lines(const std::string& text) {
  long n = 0;
  for (char c : text) {
    if (c == '\n') ++n;
  }
  return n;
}

std::string scenario(const std::string& name) {
  return std::string(STOKESIM_SCENARIO_DIR) + "/" + name;
}

}  // namespace

int main() {
  // criterion: 12 rows + header, byte-identical across runs.
  {
    const std::string out1 = tmp_path("criterion1.csv");
    const std::string out2 = tmp_path("criterion2.csv");
    int rc = run("--out " + out1 + " criterion " +
                 scenario("bright_polarization.json"));
    CHECK_MSG(rc == 0, "criterion exit code " << rc);
    rc = run("--out " + out2 + " criterion " + scenario("bright_polarization.json"));
    CHECK_MSG(rc == 0, "criterion exit code " << rc);
    const std::string csv = slurp(out1);
    CHECK_MSG(csv == slurp(out2), "criterion output is not deterministic");
    CHECK_MSG(count_lines(csv) == 13, "expected header + 12 rows");
    CHECK_MSG(csv.rfind("sigma,rho,dof_a,dof_b,value,alpha,violated", 0) == 0,
              "missing CSV header");
    CHECK_MSG(csv.find("2,3,pol,pol,0.5676") != std::string::npos,
              "bright (2,3) rows should sit near 0.567667: " << csv);
  }

  // criterion with pipeline block appends the pipeline columns.
  {
    const std::string out = tmp_path("chain.csv");
    const int rc = run("--out " + out + " criterion " +
                       scenario("experiment_chain.json"));
    CHECK_MSG(rc == 0, "criterion+pipeline exit code " << rc);
    const std::string csv = slurp(out);
    CHECK_MSG(csv.find("predicted_db,implied_eta") != std::string::npos,
              "pipeline columns missing");
    CHECK_MSG(csv.find("0.38414") != std::string::npos,
              "implied_eta 0.38414 missing: " << csv);
  }

  // missing scenario file -> exit 2.
  {
    const int rc = run("criterion /no/such/scenario.json");
    CHECK_MSG(rc == 2, "missing file should exit 2, got " << rc);
  }

  // degenerate normalization -> exit 3.
  {
    const std::string path = tmp_path("degenerate.json");
    write_file(path, R"({"family":"azimuthal","r":0,"v0":0,"network":{"topology":"polpol","m":0}})");
    const int rc = run("criterion " + path);
    CHECK_MSG(rc == 3, "degenerate scenario should exit 3, got " << rc);
  }

  // sweep: 21 x 12 rows + header; r = 0 rows of the (1,3) pair at 1.
  {
    const std::string out = tmp_path("sweep.csv");
    const int rc = run("--out " + out + " sweep " + scenario("equal_intensity.json") +
                       " --param r --from 0 --to 2 --steps 21");
    CHECK_MSG(rc == 0, "sweep exit code " << rc);
    const std::string csv = slurp(out);
    CHECK_MSG(count_lines(csv) == 21 * 12 + 1, "expected 21*12 rows + header, got "
              << count_lines(csv));
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    CHECK_MSG(line == "r,sigma,rho,dof_a,dof_b,value,alpha,violated",
              "sweep header mismatch: " << line);
    bool boundary_ok = false;
    while (std::getline(in, line)) {
      if (line.rfind("0,1,3,pol,pol,", 0) == 0) {
        std::istringstream fields(line);
        std::string field;
        for (int k = 0; k < 6 && std::getline(fields, field, ','); ++k) {
        }
        boundary_ok = std::abs(std::stod(field) - 1.0) <= 1e-9;
      }
    }
    CHECK_MSG(boundary_ok, "r=0 (1,3) row should be 1 within 1e-9");
  }

  // pipeline: prints prediction and implied efficiency.
  {
    const std::string out = tmp_path("pipeline.csv");
    const int rc = run("--out " + out + " pipeline " +
                       scenario("experiment_chain.json"));
    CHECK_MSG(rc == 0, "pipeline exit code " << rc);
    const std::string csv = slurp(out);
    CHECK_MSG(csv.find("0.38414") != std::string::npos,
              "pipeline implied_eta missing: " << csv);
    CHECK_MSG(csv.find("-1.59") != std::string::npos,
              "pipeline prediction missing: " << csv);
    const std::string err = slurp("cli_test_stderr.txt");
    CHECK_MSG(err.find("gap") != std::string::npos,
              "pipeline gap statement missing");
  }

  // oracle-check on a small scenario.
  {
    const std::string path = tmp_path("oracle.json");
    write_file(path,
               R"({"family":"azimuthal","r":0.3,"v0":0.5,"network":{"topology":"polpol","m":0.5}})");
    const int rc = run("oracle-check " + path);
    CHECK_MSG(rc == 0, "oracle-check exit code " << rc);
    const std::string text = slurp("cli_test_stdout.txt");
    CHECK_MSG(text.find("CONFORMANCE PASS") != std::string::npos,
              "conformance summary missing");
  }

  // oracle-check propagates truncation errors as exit 5.
  {
    const std::string path = tmp_path("hot.json");
    write_file(path,
               R"({"family":"azimuthal","r":0.1,"v0":4.5,"network":{"topology":"polpol","m":0}})");
    const int rc = run("oracle-check --dim 6 " + path);
    CHECK_MSG(rc == 5, "truncation overflow should exit 5, got " << rc);
  }

  // render: PGM with a dark center pixel.
  {
    const std::string pgm = tmp_path("profile.pgm");
    const int rc = run("render azimuthal --samples 64 --half-width 3 --pgm " + pgm +
                       " --arrows-csv " + tmp_path("arrows.csv"));
    CHECK_MSG(rc == 0, "render exit code " << rc);
    std::ifstream in(pgm);
    std::string magic;
    int w, h, maxval;
    in >> magic >> w >> h >> maxval;
    CHECK_MSG(magic == "P2" && w == 64 && h == 64 && maxval == 65535,
              "PGM header mismatch");
    std::vector<long> pixels;
    long value;
    while (in >> value) pixels.push_back(value);
    CHECK_MSG(static_cast<int>(pixels.size()) == w * h, "PGM pixel count");
    CHECK_MSG(pixels[static_cast<std::size_t>((h / 2) * w + w / 2)] == 0,
              "center pixel should be dark");
    const std::string arrows = slurp(tmp_path("arrows.csv"));
    CHECK_MSG(arrows.rfind("x,y,dx,dy", 0) == 0, "arrows CSV header");
  }

  if (failures == 0) {
    std::cout << "cli tests passed\n";
    return 0;
  }
  std::cerr << failures << " cli test(s) failed\n";
  return 1;
}
