// recip: invariants of reciprocal behaviors given as polynomial matrix
// fraction descriptions, and signature-symmetric realization checks.
#include <CLI11.hpp>

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "recip/bezoutian.hpp"
#include "recip/jsonio.hpp"
#include "recip/network.hpp"
#include "recip/realization.hpp"

using namespace recip;

namespace {

struct Verdict {
  std::string assertion;
  std::string anchor;  // e.g. "Thm5-pi", "Lem10-lower"
  bool pass = false;
  long long slack = 0;
};

struct Report {
  std::string command;
  std::string inputsDigest;
  json results = json::object();
  std::vector<Verdict> verdicts;

  bool all_pass() const {
    for (const auto& v : verdicts)
      if (!v.pass) return false;
    return true;
  }
};

// FNV-1a over the raw bytes of every input file, in argument order.
struct Digest {
  uint64_t h = 1469598103934665603ull;
  void feed(const std::string& bytes) {
    for (unsigned char c : bytes) {
      h ^= c;
      h *= 1099511628211ull;
    }
  }
  std::string hex() const {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
  }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

json load(Digest& dig, const std::string& path) {
  std::string bytes = slurp(path);
  dig.feed(bytes);
  try {
    return json::parse(bytes);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

void emit(const Report& rep, const std::string& format) {
  if (format == "json") {
    json j;
    j["command"] = rep.command;
    j["inputsDigest"] = rep.inputsDigest;
    j["results"] = rep.results;
    json vs = json::array();
    for (const auto& v : rep.verdicts)
      vs.push_back({{"assertion", v.assertion},
                    {"anchor", v.anchor},
                    {"pass", v.pass},
                    {"slack", v.slack}});
    j["verdicts"] = vs;
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::cout << "command: " << rep.command << "\n";
  std::cout << "inputs-digest: " << rep.inputsDigest << "\n";
  for (auto it = rep.results.begin(); it != rep.results.end(); ++it)
    std::cout << it.key() << ": " << it.value().dump() << "\n";
  for (const auto& v : rep.verdicts)
    std::cout << (v.pass ? "PASS " : "FAIL ") << v.anchor << "  " << v.assertion
              << "  (slack " << v.slack << ")\n";
}

json inertia_json(const InertiaResult& in) {
  return {{"pi", in.positive}, {"nu", in.negative}, {"zero", in.zero}};
}

void cmd_analyze(Report& rep, const LeftMFD& h) {
  rep.results["ports"] = h.ports();
  rep.results["proper"] = is_proper(h);
  bool sym = is_symmetric_tf(h);
  rep.results["symmetric"] = sym;
  rep.results["zeta"] = zeta(h.P, h.Q);
  rep.results["mcmillanDegree"] = mcmillan_degree(h);
  if (sym) {
    GammaDelta gd = gamma_delta_bez(h);
    rep.results["gamma"] = gd.gamma;
    rep.results["delta"] = gd.delta;
    rep.results["bezInertia"] = inertia_json(gd.bez_inertia);
    rep.verdicts.push_back({"delta from Bezoutian equals McMillan degree of the reduced function",
                            "Lem8-delta", gd.delta == mcmillan_degree(h), 0});
  }
}

void cmd_bezoutian(Report& rep, const LeftMFD& h) {
  BezoutianMatrix bz = bezoutian(h.P, h.Q);
  rep.results["blockOrder"] = bz.m;
  rep.results["blockSize"] = bz.n;
  rep.results["bezoutian"] = ratmat_to_json(bz.data);
  rep.results["inertia"] = inertia_json(inertia(bz.data));
}

void cmd_bounds(Report& rep, const LeftMFD& h) {
  BoundsReport b = element_bounds(h.P, h.Q);
  rep.results["piBez"] = b.piBez;
  rep.results["nuBez"] = b.nuBez;
  rep.results["zeta"] = b.zeta;
  rep.results["gamma"] = b.gamma;
  rep.results["delta"] = b.delta;
  rep.results["minCapacitors"] = b.minCapacitors;
  rep.results["minInductors"] = b.minInductors;
  rep.results["rlctgStorageCount"] = b.rlctgStorageCount;
}

void cmd_verify(Report& rep, const SignatureRealization& sr, const LeftMFD& h) {
  Theorem5Report r = verify_theorem5(sr, h, false);
  rep.results["realizes"] = r.realizes();
  if (!r.diagnosis.empty()) rep.results["diagnosis"] = r.diagnosis;
  rep.results["piSigma"] = r.pi_sigma;
  rep.results["nuSigma"] = r.nu_sigma;
  rep.results["piBez"] = r.pi_bez;
  rep.results["nuBez"] = r.nu_bez;
  rep.results["zeta"] = r.zeta;
  rep.verdicts.push_back({"realization is signature-symmetric and realizes the behavior",
                          "Thm5-pre", r.realizes(), 0});
  rep.verdicts.push_back(
      {"pi(Sigma) >= pi(Bez) + zeta", "Thm5-pi", r.pi_holds, r.pi_slack});
  rep.verdicts.push_back(
      {"nu(Sigma) >= nu(Bez) + zeta", "Thm5-nu", r.nu_holds, r.nu_slack});
}

void cmd_realize(Report& rep, const LeftMFD& h) {
  SignatureRealization sr = minimal_signature_realization(h);
  rep.results["realization"] = realization_to_json(sr);
  rep.results["states"] = sr.ss.states();
  Theorem5Report r = verify_theorem5(sr, h);
  rep.verdicts.push_back(
      {"pi(Sigma) = pi(Bez) + zeta", "Thm5-pi", r.pi_holds && r.pi_slack == 0, r.pi_slack});
  rep.verdicts.push_back(
      {"nu(Sigma) = nu(Bez) + zeta", "Thm5-nu", r.nu_holds && r.nu_slack == 0, r.nu_slack});
}

void cmd_theorem9(Report& rep, const LeftMFD& h, const RatMat& s) {
  Theorem9Report r = check_theorem9(h, s);
  rep.results["gammaH"] = r.gamma_h;
  rep.results["deltaH"] = r.delta_h;
  rep.results["gammaSHS"] = r.gamma_shs;
  rep.results["deltaSHS"] = r.delta_shs;
  rep.results["deltaSH"] = r.delta_sh;
  rep.verdicts.push_back({"gamma(H) + delta(H) >= gamma(S^T H S) - delta(S^T H S) + 2 delta(S^T H)",
                          "Thm9-5", r.ineq5_holds, r.lhs5 - r.rhs5});
  rep.verdicts.push_back({"gamma(H) - delta(H) <= gamma(S^T H S) + delta(S^T H S) - 2 delta(S^T H)",
                          "Thm9-6", r.ineq6_holds, r.rhs6 - r.lhs6});
}

void cmd_network(Report& rep, const NetworkData& nd) {
  validate_network(nd);
  NetworkRealization nr = network_realization(nd);
  rep.results["realization"] = realization_to_json(nr.exact);
  rep.results["states"] = nr.exact.ss.states();
  LeftMFD h = transfer_function(nr.exact.ss);
  BoundsReport b = element_bounds(h.P, h.Q);
  rep.results["minCapacitors"] = b.minCapacitors;
  rep.results["minInductors"] = b.minInductors;
  rep.verdicts.push_back({"extracted realization is signature-symmetric", "Thm6-extraction",
                          is_signature_symmetric(nr.exact), 0});
  rep.verdicts.push_back({"capacitor count >= pi(Bez) + zeta", "Thm5-pi",
                          nr.exact.pi() >= b.minCapacitors,
                          nr.exact.pi() - b.minCapacitors});
  rep.verdicts.push_back({"inductor count >= nu(Bez) + zeta", "Thm5-nu",
                          nr.exact.nu() >= b.minInductors,
                          nr.exact.nu() - b.minInductors});
}

RatMat random_symmetric(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> d(-3, 3);
  RatMat m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Rat v(d(rng));
      m.at(i, j) = v;
      m.at(j, i) = v;
    }
  return m;
}

RatMat random_mat(std::mt19937_64& rng, int r, int c) {
  std::uniform_int_distribution<int> d(-3, 3);
  RatMat m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.at(i, j) = Rat(d(rng));
  return m;
}

LeftMFD random_symmetric_mfd(std::mt19937_64& rng, int ports, int states) {
  std::uniform_int_distribution<int> sign(0, 1);
  std::vector<Rat> w(static_cast<size_t>(states));
  for (auto& x : w) x = sign(rng) ? Rat(1) : Rat(-1);
  RatMat sigma = RatMat::diagonal(w);
  RatMat a = random_symmetric(rng, states) * sigma;
  RatMat c = random_mat(rng, ports, states);
  RatMat b = sigma * c.transpose();
  RatMat d = random_symmetric(rng, ports);
  return transfer_function(StateSpace(a, b, c, d));
}

void cmd_selftest(Report& rep, int trials, uint64_t seed) {
  std::mt19937_64 rng(seed);
  rep.results["trials"] = trials;
  rep.results["seed"] = seed;

  int lem10_fail = 0;
  for (int t = 0; t < trials; ++t) {
    std::uniform_int_distribution<int> dim(1, 6);
    RatMat p = random_symmetric(rng, dim(rng));
    RatMat s = random_mat(rng, p.rows(), dim(rng) - 1);
    if (!sylvester_bounds_check(p, s).holds()) ++lem10_fail;
  }
  rep.verdicts.push_back({"generalized inertia bounds hold on random (P, S)", "Lem10",
                          lem10_fail == 0, -lem10_fail});

  int thm9_fail = 0;
  for (int t = 0; t < trials; ++t) {
    std::uniform_int_distribution<int> ports(1, 2), states(0, 4);
    int n = ports(rng);
    LeftMFD h = random_symmetric_mfd(rng, n, states(rng));
    RatMat s = random_mat(rng, n, ports(rng));
    if (!check_theorem9(h, s).holds()) ++thm9_fail;
  }
  rep.verdicts.push_back({"degree/index inequalities hold on random (H, S)", "Thm9",
                          thm9_fail == 0, -thm9_fail});

  int lem8_fail = 0;
  for (int t = 0; t < trials; ++t) {
    std::uniform_int_distribution<int> ports(1, 2), states(0, 4);
    LeftMFD h = random_symmetric_mfd(rng, ports(rng), states(rng));
    GammaDelta gd = gamma_delta_bez(h);
    if (gd.gamma != gamma_hankel(h) || gd.delta != mcmillan_degree_hankel(h)) ++lem8_fail;
  }
  rep.verdicts.push_back({"Bezoutian and Hankel routes to (gamma, delta) agree", "Lem8",
                          lem8_fail == 0, -lem8_fail});
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"invariants and signature-symmetric realizations of reciprocal behaviors"};
  app.require_subcommand(1);

  std::string format = "json";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();

  std::string mfd_path, realization_path, smat_path, network_path;
  int trials = 100;
  uint64_t seed = 0;
  bool seed_given = false;

  auto* analyze = app.add_subcommand("analyze", "full invariant report for an MFD");
  analyze->add_option("--mfd", mfd_path)->required();
  auto* bez = app.add_subcommand("bezoutian", "Bezoutian matrix and its inertia");
  bez->add_option("--mfd", mfd_path)->required();
  auto* bounds = app.add_subcommand("bounds", "element-count lower bounds");
  bounds->add_option("--mfd", mfd_path)->required();
  auto* verify = app.add_subcommand("verify", "check a realization against a behavior");
  verify->add_option("--realization", realization_path)->required();
  verify->add_option("--mfd", mfd_path)->required();
  auto* realize = app.add_subcommand("realize", "minimal signature-symmetric realization");
  realize->add_option("--mfd", mfd_path)->required();
  auto* thm9 = app.add_subcommand("theorem9", "degree/index inequalities for S^T H S");
  thm9->add_option("--mfd", mfd_path)->required();
  thm9->add_option("--smat", smat_path)->required();
  auto* network = app.add_subcommand("network", "extract a realization from network data");
  network->add_option("--network", network_path)->required();
  auto* selftest = app.add_subcommand("selftest", "randomized property trials");
  selftest->add_option("--trials", trials)->check(CLI::NonNegativeNumber);
  selftest->add_option("--seed", seed)->each([&](const std::string&) { seed_given = true; });

  CLI11_PARSE(app, argc, argv);

  Report rep;
  Digest dig;
  try {
    if (analyze->parsed()) {
      rep.command = "analyze";
      cmd_analyze(rep, mfd_from_json(load(dig, mfd_path)));
    } else if (bez->parsed()) {
      rep.command = "bezoutian";
      cmd_bezoutian(rep, mfd_from_json(load(dig, mfd_path)));
    } else if (bounds->parsed()) {
      rep.command = "bounds";
      cmd_bounds(rep, mfd_from_json(load(dig, mfd_path)));
    } else if (verify->parsed()) {
      rep.command = "verify";
      SignatureRealization sr = realization_from_json(load(dig, realization_path));
      cmd_verify(rep, sr, mfd_from_json(load(dig, mfd_path)));
    } else if (realize->parsed()) {
      rep.command = "realize";
      cmd_realize(rep, mfd_from_json(load(dig, mfd_path)));
    } else if (thm9->parsed()) {
      rep.command = "theorem9";
      LeftMFD h = mfd_from_json(load(dig, mfd_path));
      cmd_theorem9(rep, h, ratmat_from_json(load(dig, smat_path)));
    } else if (network->parsed()) {
      rep.command = "network";
      cmd_network(rep, network_from_json(load(dig, network_path)));
    } else {
      rep.command = "selftest";
      if (!seed_given) {
        if (const char* env = std::getenv("RECIP_SEED")) seed = std::strtoull(env, nullptr, 10);
      }
      std::string key = std::to_string(trials) + ":" + std::to_string(seed);
      dig.feed(key);
      cmd_selftest(rep, trials, seed);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  rep.inputsDigest = dig.hex();
  emit(rep, format);
  return rep.all_pass() ? 0 : 1;
}
