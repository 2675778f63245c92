// Copyright 2026 The pyrep Authors.
// SPDX-License-Identifier: Apache-2.0

// Command-line front end; uses only the C interface.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "pyrep/pyrep.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A file path, or the text itself when no such file exists.
std::string slurp(const std::string& arg) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(arg, ec)) return arg;
  std::ifstream in(arg, std::ios::binary);
  if (!in) throw Usage("cannot read " + arg);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Usage("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string g17(double x) {
  if (x == 0) x = 0;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

int status_exit(pyrep_status s) {
  if (s == PYREP_OK) return kExitOk;
  std::cerr << "error: " << pyrep_last_error() << "\n";
  return s == PYREP_NEGATIVE ? kExitNegative : kExitUsage;
}

std::string take(char* s) {
  std::string out = s ? s : "";
  pyrep_string_free(s);
  return out;
}

template <class T, void (*Free)(T*)>
struct Handle {
  T* p = nullptr;
  Handle() = default;
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  ~Handle() { Free(p); }
};

using Pair = Handle<pyrep_pair, pyrep_pair_free>;
using Element = Handle<pyrep_element, pyrep_element_free>;
using Vec = Handle<pyrep_vector, pyrep_vector_free>;
using Report = Handle<pyrep_report, pyrep_report_free>;

double parse_angle(const std::string& s) {
  const std::string t = s;
  const auto pi = t.find("pi");
  try {
    if (pi == std::string::npos) return std::stod(t);
    double num = 1, den = 1;
    const std::string head = t.substr(0, pi);
    const std::string tail = t.substr(pi + 2);
    if (!head.empty()) num = std::stod(head.back() == '*' ? head.substr(0, head.size() - 1) : head);
    if (!tail.empty()) {
      if (tail[0] != '/') throw Usage("bad angle " + s);
      den = std::stod(tail.substr(1));
    }
    return num * std::numbers::pi / den;
  } catch (const std::logic_error&) {
    throw Usage("bad angle " + s);
  }
}

struct Config {
  double tol = -1;
  int max_level = -1;
  std::uint64_t seed = 0;
  std::string format = "json";
  int check = 0;
};

int cmd_verify(const std::string& file, const Config& cfg) {
  double defect = 0;
  const pyrep_status s = pyrep_pair_check(read_file(file).c_str(), cfg.tol, &defect);
  if (s != PYREP_OK && s != PYREP_NEGATIVE) return status_exit(s);
  if (cfg.format == "text")
    std::cout << (s == PYREP_OK ? "valid" : "violated") << ", defect " << g17(defect) << "\n";
  else
    std::cout << "{\"valid\": " << (s == PYREP_OK ? "true" : "false") << ", \"defect\": "
              << g17(defect) << "}\n";
  return s == PYREP_OK ? kExitOk : kExitNegative;
}

pyrep_status load_pair(const std::string& file, const Config& cfg, Pair& pair) {
  return pyrep_pair_parse(read_file(file).c_str(), cfg.tol, &pair.p);
}

int cmd_decompose(const std::string& file, const Config& cfg) {
  Pair pair;
  if (auto s = load_pair(file, cfg, pair)) return status_exit(s);
  Report rep;
  if (auto s = pyrep_decompose(pair.p, cfg.max_level, &rep.p)) return status_exit(s);
  char* out = nullptr;
  const pyrep_format f = cfg.format == "text" ? PYREP_FORMAT_TEXT : PYREP_FORMAT_JSON;
  if (auto s = pyrep_report_render(rep.p, f, &out)) return status_exit(s);
  std::cout << take(out);
  if (f == PYREP_FORMAT_JSON) std::cout << "\n";
  if (cfg.check > 0) {
    const pyrep_status s = pyrep_report_verify(pair.p, rep.p, cfg.check, 12, cfg.seed, 1e-9);
    if (s == PYREP_OK) std::cerr << "coefficient check passed on " << cfg.check << " elements\n";
    return status_exit(s);
  }
  return kExitOk;
}

int cmd_coeff(const std::string& pair_file, const std::string& element, const std::string& vector,
              const Config& cfg) {
  Pair pair;
  if (auto s = load_pair(pair_file, cfg, pair)) return status_exit(s);
  Element g;
  if (auto s = pyrep_element_parse(slurp(element).c_str(), &g.p)) return status_exit(s);
  Vec x;
  if (auto s = pyrep_vector_parse(slurp(vector).c_str(), &x.p)) return status_exit(s);
  double re = 0, im = 0;
  if (auto s = pyrep_coefficient(pair.p, g.p, x.p, &re, &im)) return status_exit(s);
  std::cout << g17(re) << " " << g17(im) << "\n";
  return kExitOk;
}

int cmd_act(const std::string& element, const std::string& ray, const std::string& word,
            const std::string& pair_file, const std::string& vector, const Config& cfg) {
  Element g;
  if (auto s = pyrep_element_parse(slurp(element).c_str(), &g.p)) return status_exit(s);
  const int modes = !ray.empty() + !word.empty() + !vector.empty();
  if (modes != 1) throw Usage("act needs exactly one of --ray, --word, --vector");
  char* out = nullptr;
  if (!ray.empty()) {
    int slope = 0, fixes = 0;
    if (auto s = pyrep_element_act_ray(g.p, slurp(ray).c_str(), &out, &slope, &fixes))
      return status_exit(s);
    const std::string img = take(out);
    if (cfg.format == "text")
      std::cout << img << "\nlog2 slope " << slope << (fixes ? ", fixed" : ", moved") << "\n";
    else
      std::cout << "{\"image\": " << img << ", \"log2_slope\": " << slope
                << ", \"fixed\": " << (fixes ? "true" : "false") << "}\n";
    return kExitOk;
  }
  if (!word.empty()) {
    if (auto s = pyrep_element_act_word(g.p, word == "''" ? "" : word.c_str(), &out))
      return status_exit(s);
    std::cout << "\"" << take(out) << "\"\n";
    return kExitOk;
  }
  if (pair_file.empty()) throw Usage("act --vector needs --pair");
  Pair pair;
  if (auto s = load_pair(pair_file, cfg, pair)) return status_exit(s);
  Vec x;
  if (auto s = pyrep_vector_parse(slurp(vector).c_str(), &x.p)) return status_exit(s);
  Vec y;
  if (auto s = pyrep_act(pair.p, g.p, x.p, &y.p)) return status_exit(s);
  if (auto s = pyrep_vector_to_json(y.p, &out)) return status_exit(s);
  std::cout << take(out) << "\n";
  return kExitOk;
}

int cmd_equiv(const std::string& f1, const std::string& f2, const Config& cfg) {
  Pair p1, p2;
  if (auto s = load_pair(f1, cfg, p1)) return status_exit(s);
  if (auto s = load_pair(f2, cfg, p2)) return status_exit(s);
  Report r1, r2;
  if (auto s = pyrep_decompose(p1.p, cfg.max_level, &r1.p)) return status_exit(s);
  if (auto s = pyrep_decompose(p2.p, cfg.max_level, &r2.p)) return status_exit(s);
  const pyrep_status s = pyrep_reports_equivalent(r1.p, r2.p);
  if (s != PYREP_OK && s != PYREP_NEGATIVE) return status_exit(s);
  std::cout << (s == PYREP_OK ? "equivalent" : "inequivalent") << "\n";
  return s == PYREP_OK ? kExitOk : kExitNegative;
}

int cmd_random(int dim, const std::string& kind, const Config& cfg) {
  Pair pair;
  pyrep_status s;
  if (kind == "atomic" || kind == "isometry")
    s = pyrep_pair_random(dim, kind.c_str(), 0, cfg.seed, &pair.p);
  else
    s = pyrep_pair_random(dim, "rotation", parse_angle(kind), cfg.seed, &pair.p);
  if (s) return status_exit(s);
  char* out = nullptr;
  if (auto st = pyrep_pair_to_json(pair.p, &out)) return status_exit(st);
  std::cout << take(out) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pyrep: Pythagorean representations of Thompson's group F"};
  app.require_subcommand(1);
  Config cfg;
  std::string fmt = "json";

  auto add_common = [&](CLI::App* c) {
    c->add_option("--tol", cfg.tol, "identity-check tolerance (default: the file's tol)")
        ->check(CLI::PositiveNumber);
    c->add_option("--format", fmt, "output format")->check(CLI::IsMember({"json", "text"}));
  };

  std::string f1, f2, element, vector, ray, word, pair_file, kind;
  int dim = 0;

  auto* verify = app.add_subcommand("verify", "check the Pythagorean identity of a pair file");
  verify->add_option("pair", f1, "pair JSON file")->required();
  add_common(verify);

  auto* decompose = app.add_subcommand("decompose", "decomposition report of a pair");
  decompose->add_option("pair", f1, "pair JSON file")->required();
  decompose->add_option("--max-level", cfg.max_level, "level cap for the quasi-contained space")
      ->check(CLI::NonNegativeNumber);
  decompose->add_option("--check", cfg.check,
                        "cross-check every summand against Fock-space coefficients on N elements")
      ->check(CLI::NonNegativeNumber);
  decompose->add_option("--seed", cfg.seed, "seed for --check");
  add_common(decompose);

  auto* coeff = app.add_subcommand("coeff", "matrix coefficient <sigma(g) x, x>");
  coeff->add_option("pair", f1, "pair JSON file")->required();
  coeff->add_option("element", element, "x0, x1, id, or element JSON (file or inline)")->required();
  coeff->add_option("vector", vector, "vector JSON (file or inline)")->required();
  add_common(coeff);

  auto* act = app.add_subcommand("act", "apply a group element to a ray, a word or a vector");
  act->add_option("element", element, "x0, x1, id, or element JSON (file or inline)")->required();
  act->add_option("--ray", ray, "l, r, or ray JSON");
  act->add_option("--word", word, "binary word");
  act->add_option("--vector", vector, "vector JSON (needs --pair)");
  act->add_option("--pair", pair_file, "pair JSON file");
  add_common(act);

  auto* equiv = app.add_subcommand("equiv", "compare the atomic parts of two pairs");
  equiv->add_option("pair1", f1, "pair JSON file")->required();
  equiv->add_option("pair2", f2, "pair JSON file")->required();
  equiv->add_option("--max-level", cfg.max_level, "level cap for the quasi-contained space")
      ->check(CLI::NonNegativeNumber);
  add_common(equiv);

  auto* random = app.add_subcommand("random", "random Pythagorean pair");
  random->add_option("dim", dim, "dimension")->required()->check(CLI::PositiveNumber);
  random->add_option("kind", kind, "angle theta (e.g. 0.3, pi/5), atomic, or isometry")
      ->required();
  random->add_option("--seed", cfg.seed, "random seed");
  add_common(random);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  cfg.format = fmt;

  try {
    if (verify->parsed()) return cmd_verify(f1, cfg);
    if (decompose->parsed()) return cmd_decompose(f1, cfg);
    if (coeff->parsed()) return cmd_coeff(f1, element, vector, cfg);
    if (act->parsed()) return cmd_act(element, ray, word, pair_file, vector, cfg);
    if (equiv->parsed()) return cmd_equiv(f1, f2, cfg);
    if (random->parsed()) return cmd_random(dim, kind, cfg);
  } catch (const Usage& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
