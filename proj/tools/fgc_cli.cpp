/*
 * Copyright 2026 The fgc Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fgc/channel.hpp"
#include "fgc/dense.hpp"
#include "fgc/errors.hpp"
#include "fgc/fidelity.hpp"
#include "fgc/io.hpp"
#include "fgc/models.hpp"
#include "fgc/recovery.hpp"
#include "fgc/rng.hpp"
#include "fgc/state.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitFaithfulness = 3;
constexpr int kExitVerifyFailed = 4;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw fgc::io::IoError("cannot open '" + path + "' for reading");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

double max_singular_value(const fgc::GaussianChannelData& ch) {
  const int out = 2 * ch.modes_out();
  const int in = 2 * ch.modes_in();
  Eigen::MatrixXd packed(out + in, out + in);
  packed.topLeftCorner(out, out) = ch.A;
  packed.topRightCorner(out, in) = ch.B;
  packed.bottomLeftCorner(in, out) = -ch.B.transpose();
  packed.bottomRightCorner(in, in) = ch.D;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(packed);
  return svd.singularValues()(0);
}

void print_support_report(const fgc::CovarianceMatrix& tau) {
  fgc::PuritySpectrum spectrum = fgc::purity_spectrum(tau);
  std::cout << "support report for N(sigma):\n";
  for (size_t i = 0; i < spectrum.values.size(); ++i) {
    std::printf("  mode %zu: williamson value %.12f (%s)\n", i,
                spectrum.values[i], spectrum.pure[i] ? "pure" : "mixed");
  }
  std::cout << "rerun with --support to build the recovery on the mixed "
               "block only\n";
}

int run_validate(const std::string& path) {
  const std::string text = read_file(path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitIo;
  }

  if (doc.is_object() && doc.contains("n_in")) {
    fgc::GaussianChannelData ch = fgc::io::parse_channel(text);
    std::printf("channel: %d -> %d modes\n", ch.modes_in(), ch.modes_out());
    try {
      fgc::validate_structure(ch);
    } catch (const fgc::InvalidChannelError& e) {
      std::printf("structure: invalid (%s)\n", e.what());
      std::printf("verdict: invalid\n");
      return kExitInvalid;
    }
    std::printf("structure: ok\n");
    const double top = max_singular_value(ch);
    std::printf("max singular value: %.12f\n", top);
    const bool cp = fgc::validate_cp(ch);
    const bool tp = fgc::validate_tp(ch);
    const bool unital = fgc::validate_unital(ch);
    std::printf("CP: %s, TP: %s, unital: %s\n", cp ? "yes" : "no",
                tp ? "yes" : "no", unital ? "yes" : "no");
    if (!cp) {
      std::printf("verdict: invalid (not completely positive)\n");
      return kExitInvalid;
    }
    std::printf("verdict: valid\n");
    return kExitOk;
  }

  fgc::CovarianceMatrix g = fgc::io::parse_state(text);
  std::printf("state: %d modes\n", g.modes());
  std::printf("williamson values:");
  for (double v : g.williamson()) {
    std::printf(" %.12f", v);
  }
  std::printf("\nverdict: valid\n");
  return kExitOk;
}

int run_petz(const std::string& sigma_path, const std::string& channel_path,
             const std::string& out_path, double t, bool on_support) {
  fgc::CovarianceMatrix sigma = fgc::io::read_state(sigma_path);
  fgc::GaussianChannelData data = fgc::io::read_channel(channel_path);
  if (!fgc::validate_tp(data)) {
    std::cerr << "channel file is not trace preserving; recovery is defined "
                 "for channels only\n";
    return kExitInvalid;
  }
  fgc::GaussianCPTPChannel ch(data.A, data.B);

  if (on_support) {
    fgc::SupportPetzResult support = fgc::petz_on_support(sigma, ch);
    fgc::io::write_channel(out_path, support.channel);
    std::printf("support channel written to %s\n", out_path.c_str());
    std::printf("mixed modes:");
    for (int i : support.mixed_modes) std::printf(" %d", i);
    std::printf("\npure modes:");
    for (int i : support.pure_modes) std::printf(" %d", i);
    std::printf("\n");

    fgc::CovarianceMatrix tau = fgc::apply(ch, sigma);
    Eigen::MatrixXd rotated =
        support.basis * tau.matrix() * support.basis.transpose();
    const int mixed = static_cast<int>(support.mixed_modes.size());
    Eigen::MatrixXd compressed(2 * mixed, 2 * mixed);
    for (int a = 0; a < mixed; ++a) {
      for (int b = 0; b < mixed; ++b) {
        compressed.block<2, 2>(2 * a, 2 * b) = rotated.block<2, 2>(
            2 * support.mixed_modes[static_cast<size_t>(a)],
            2 * support.mixed_modes[static_cast<size_t>(b)]);
      }
    }
    fgc::CovarianceMatrix anchor = fgc::validate_covariance(
        fgc::AntisymmetricMatrix(0.5 * (compressed - compressed.transpose())));
    const double residual =
        (fgc::apply(support.channel, anchor).matrix() - sigma.matrix())
            .cwiseAbs()
            .maxCoeff();
    std::printf("recovery residual = %.6e\n", residual);
    return kExitOk;
  }

  fgc::CovarianceMatrix tau = fgc::apply(ch, sigma);
  fgc::GaussianCPTPChannel recovery =
      (t == 0.0) ? fgc::petz(sigma, ch) : fgc::rotated_petz(sigma, ch, t);
  fgc::io::write_channel(out_path, recovery);
  const double residual =
      (fgc::apply(recovery, tau).matrix() - sigma.matrix())
          .cwiseAbs()
          .maxCoeff();
  std::printf("recovery channel written to %s\n", out_path.c_str());
  std::printf("recovery residual = %.6e\n", residual);
  return kExitOk;
}

int run_fidelity(const std::string& a_path, const std::string& b_path) {
  fgc::CovarianceMatrix a = fgc::io::read_state(a_path);
  fgc::CovarianceMatrix b = fgc::io::read_state(b_path);
  std::printf("fidelity = %.12f\n", fgc::fidelity(a, b));
  std::printf("overlap = %.12f\n", fgc::overlap(a, b));
  return kExitOk;
}

int run_apply(const std::string& channel_path, const std::string& state_path,
              const std::string& out_path) {
  fgc::GaussianChannelData data = fgc::io::read_channel(channel_path);
  if (!fgc::validate_tp(data)) {
    std::cerr << "channel file is not trace preserving; it cannot act on "
                 "states\n";
    return kExitInvalid;
  }
  fgc::GaussianCPTPChannel ch(data.A, data.B);
  fgc::CovarianceMatrix g = fgc::io::read_state(state_path);
  fgc::io::write_state(out_path, fgc::apply(ch, g));
  std::printf("output state written to %s\n", out_path.c_str());
  return kExitOk;
}

int run_compose(const std::string& first_path, const std::string& second_path,
                const std::string& out_path) {
  fgc::GaussianChannelData first = fgc::io::read_channel(first_path);
  fgc::GaussianChannelData second = fgc::io::read_channel(second_path);
  fgc::validate_structure(first);
  fgc::validate_structure(second);
  fgc::GaussianChannelData composite = fgc::compose(second, first);
  fgc::io::write_channel(out_path, composite);
  std::printf("composite (second after first) written to %s\n",
              out_path.c_str());
  std::printf("constant C = %.12f %+.12fi\n", composite.C.real(),
              composite.C.imag());
  return kExitOk;
}

int run_random(const std::string& kind, const std::string& out_path,
               std::uint64_t seed, int n, int m) {
  if (kind == "state") {
    fgc::io::write_state(out_path, fgc::random_state(seed, n));
  } else if (kind == "channel") {
    fgc::io::write_channel(out_path, fgc::random_channel(seed, n, m));
  } else {
    fgc::io::write_dilation(out_path, fgc::random_dilation(seed, n, m));
  }
  std::printf("%s written to %s\n", kind.c_str(), out_path.c_str());
  return kExitOk;
}

// ---------------------------------------------------------------------------
// verify: seeded property suite. The report is timing-free so identical
// configurations produce byte-identical output.

struct PropertyResult {
  std::string name;
  int trials = 0;
  double worst = 0.0;
  double limit = 0.0;
  bool pass() const { return worst <= limit; }
};

class VerifySuite {
 public:
  VerifySuite(std::uint64_t seed, int n, int trials, double tol_override)
      : seed_(seed), n_(n), trials_(trials), override_(tol_override) {}

  template <typename Fn>
  void property(const std::string& name, double default_limit, int trials,
                Fn&& residual_of_trial) {
    PropertyResult r;
    r.name = name;
    r.trials = trials;
    r.limit = override_ > 0.0 ? override_ : default_limit;
    for (int k = 0; k < trials; ++k) {
      r.worst = std::max(r.worst, residual_of_trial(
                                      fgc::derive_seed(seed_, counter_++)));
    }
    results_.push_back(r);
  }

  bool report() const {
    bool all = true;
    for (const PropertyResult& r : results_) {
      all = all && r.pass();
      std::printf("%s %-34s trials=%-3d worst=%.11e limit=%.1e\n",
                  r.pass() ? "PASS" : "FAIL", r.name.c_str(), r.trials,
                  r.worst, r.limit);
    }
    size_t passed = 0;
    for (const PropertyResult& r : results_) {
      if (r.pass()) ++passed;
    }
    std::printf("RESULT: %s %zu/%zu\n", all ? "PASS" : "FAIL", passed,
                results_.size());
    return all;
  }

  int modes() const { return n_; }
  int trials() const { return trials_; }

 private:
  std::uint64_t seed_;
  int n_;
  int trials_;
  double override_;
  std::uint64_t counter_ = 0;
  std::vector<PropertyResult> results_;
};

int run_verify(std::uint64_t seed, int n, int trials, bool with_dense,
               double tol_override) {
  if (with_dense && n > 5) {
    std::cerr << "--dense requires n <= 5\n";
    return kExitInvalid;
  }
  std::printf("verify seed=%llu n=%d trials=%d dense=%s\n",
              static_cast<unsigned long long>(seed), n, trials,
              with_dense ? "on" : "off");
  VerifySuite suite(seed, n, trials, tol_override);

  suite.property(
      "canonical_reconstruction", 1e-9, trials, [n](std::uint64_t s) {
        std::mt19937_64 rng(s);
        fgc::AntisymmetricMatrix m = fgc::random_antisymmetric(rng, n);
        fgc::CanonicalForm canon = fgc::canonical_decompose(m);
        Eigen::MatrixXd rebuilt = Eigen::MatrixXd::Zero(m.dim(), m.dim());
        for (int i = 0; i < m.modes(); ++i) {
          const double v = canon.signed_value(i);
          rebuilt(2 * i, 2 * i + 1) = -v;
          rebuilt(2 * i + 1, 2 * i) = v;
        }
        rebuilt = canon.O.transpose() * rebuilt * canon.O;
        const double scale = std::max(1.0, m.matrix().cwiseAbs().maxCoeff());
        return (rebuilt - m.matrix()).cwiseAbs().maxCoeff() / scale;
      });

  suite.property(
      "pfaffian_determinant", 1e-8, trials, [n](std::uint64_t s) {
        std::mt19937_64 rng(s);
        fgc::AntisymmetricMatrix m = fgc::random_antisymmetric(rng, n);
        fgc::SignedLog pf = fgc::pfaffian_log(m);
        fgc::SignedLog det = fgc::log_abs_det(m.matrix());
        return std::abs(std::expm1(2.0 * pf.log_abs - det.log_abs));
      });

  suite.property(
      "pfaffian_congruence", 1e-8, trials, [n](std::uint64_t s) {
        std::mt19937_64 rng(s);
        fgc::AntisymmetricMatrix m = fgc::random_antisymmetric(rng, n);
        Eigen::MatrixXd b = fgc::gaussian_matrix(rng, 2 * n, 2 * n);
        fgc::AntisymmetricMatrix congruent(
            0.5 * ((b * m.matrix() * b.transpose()) -
                   (b * m.matrix() * b.transpose()).transpose()));
        fgc::SignedLog left = fgc::pfaffian_log(congruent);
        fgc::SignedLog det_b = fgc::log_abs_det(b);
        fgc::SignedLog right = fgc::pfaffian_log(m);
        const double expected = det_b.log_abs + right.log_abs;
        if (left.sign == 0.0 || right.sign == 0.0) return 0.0;
        return std::abs(std::expm1(left.log_abs - expected));
      });

  suite.property(
      "composition_cptp", fgc::tol::kCompletePositivity, trials,
      [n](std::uint64_t s) {
        fgc::GaussianCPTPChannel a = fgc::random_channel(s, n, 1);
        fgc::GaussianCPTPChannel b =
            fgc::random_channel(fgc::derive_seed(s, 1), n, 1);
        fgc::GaussianCPTPChannel both = fgc::compose(b, a);
        fgc::GaussianChannelData data = both.data();
        const double cp_excess = std::max(0.0, max_singular_value(data) - 1.0);
        const double tp_residual =
            std::max(std::abs(data.C - std::complex<double>(1.0, 0.0)),
                     data.D.cwiseAbs().maxCoeff());
        return std::max(cp_excess, tp_residual);
      });

  suite.property(
      "adjoint_unital", fgc::tol::kTracePreserving, trials,
      [n](std::uint64_t s) {
        fgc::GaussianChannelData dual =
            fgc::adjoint(fgc::random_channel(s, n, 1).data());
        return std::max(dual.A.cwiseAbs().maxCoeff(),
                        std::abs(dual.C - std::complex<double>(1.0, 0.0)));
      });

  suite.property("petz_recovery", 1e-11, trials, [n](std::uint64_t s) {
    fgc::CovarianceMatrix sigma = fgc::random_state(s, n);
    fgc::GaussianCPTPChannel ch =
        fgc::random_channel(fgc::derive_seed(s, 1), n, 1);
    fgc::CovarianceMatrix tau = fgc::apply(ch, sigma);
    fgc::CovarianceMatrix back = fgc::apply(fgc::petz(sigma, ch), tau);
    return (back.matrix() - sigma.matrix()).cwiseAbs().maxCoeff();
  });

  suite.property("petz_two_path", 1e-7, trials, [n](std::uint64_t s) {
    const bool degenerate = (s % 5) == 4;
    fgc::CovarianceMatrix sigma = degenerate
                                      ? fgc::CovarianceMatrix::maximally_mixed(n)
                                      : fgc::random_state(s, n);
    fgc::GaussianCPTPChannel ch =
        fgc::random_channel(fgc::derive_seed(s, 1), n, 1);
    fgc::GaussianCPTPChannel direct = fgc::petz(sigma, ch);
    fgc::GaussianCPTPChannel chained = fgc::petz_via_composition(sigma, ch);
    return std::max(
        (direct.linear() - chained.linear()).cwiseAbs().maxCoeff(),
        (direct.offset() - chained.offset()).cwiseAbs().maxCoeff());
  });

  suite.property("rotated_recovery", 1e-9, trials, [n](std::uint64_t s) {
    fgc::CovarianceMatrix sigma = fgc::random_state(s, n);
    fgc::GaussianCPTPChannel ch =
        fgc::random_channel(fgc::derive_seed(s, 1), n, 1);
    fgc::CovarianceMatrix tau = fgc::apply(ch, sigma);
    fgc::GaussianCPTPChannel recovery = fgc::rotated_petz(sigma, ch, 0.7);
    return (fgc::apply(recovery, tau).matrix() - sigma.matrix())
        .cwiseAbs()
        .maxCoeff();
  });

  suite.property("fidelity_symmetry", 1e-12, trials, [n](std::uint64_t s) {
    fgc::CovarianceMatrix a = fgc::random_state(s, n);
    fgc::CovarianceMatrix b = fgc::random_state(fgc::derive_seed(s, 1), n);
    const double fab = fgc::fidelity(a, b);
    const double fba = fgc::fidelity(b, a);
    return std::max({std::abs(fab - fba), std::max(0.0, fab - 1.0),
                     std::max(0.0, -fab)});
  });

  suite.property("fidelity_monotonicity", 1e-9, trials, [n](std::uint64_t s) {
    fgc::CovarianceMatrix a = fgc::random_state(s, n);
    fgc::CovarianceMatrix b = fgc::random_state(fgc::derive_seed(s, 1), n);
    fgc::GaussianCPTPChannel ch =
        fgc::random_channel(fgc::derive_seed(s, 2), n, 1);
    return std::max(0.0, -fgc::monotonicity_margin(ch, a, b));
  });

  suite.property("wick_pair_consistency", 1e-12, trials,
                 [n](std::uint64_t s) {
                   fgc::CovarianceMatrix g = fgc::random_state(s, n);
                   double worst = 0.0;
                   for (int i = 0; i < g.dim(); ++i) {
                     for (int j = i + 1; j < g.dim(); ++j) {
                       const std::complex<double> moment =
                           std::complex<double>(0.0, 1.0) *
                           fgc::wick_expectation(g, {i, j});
                       worst = std::max(
                           worst, std::abs(moment.real() - g.matrix()(i, j)));
                       worst = std::max(worst, std::abs(moment.imag()));
                     }
                   }
                   return worst;
                 });

  if (with_dense) {
    const int nd = std::min(n, 3);
    const int dense_trials = std::min(trials, 10);

    suite.property(
        "dense_petz_match", 1e-8, dense_trials, [nd](std::uint64_t s) {
          fgc::Dilation d = fgc::random_dilation(s, nd, 1);
          fgc::GaussianCPTPChannel ch = fgc::dilation_channel(d);
          fgc::CovarianceMatrix sigma =
              fgc::random_state(fgc::derive_seed(s, 1), nd);
          fgc::GaussianCPTPChannel recovery = fgc::petz(sigma, ch);
          fgc::dense::Superoperator reference = fgc::dense::petz(
              fgc::dense::state_from_covariance(sigma),
              fgc::dense::channel_from_dilation(d));
          double worst = 0.0;
          for (int probe = 0; probe < 3; ++probe) {
            fgc::CovarianceMatrix rho = fgc::apply(
                ch, fgc::random_state(fgc::derive_seed(s, 2 + probe), nd));
            Eigen::MatrixXcd image = reference.apply(
                fgc::dense::state_from_covariance(rho));
            worst = std::max(
                worst, (fgc::dense::covariance_of(image).matrix() -
                        fgc::apply(recovery, rho).matrix())
                           .cwiseAbs()
                           .maxCoeff());
          }
          return worst;
        });

    suite.property(
        "dense_fidelity_match", 1e-9, dense_trials, [nd](std::uint64_t s) {
          fgc::CovarianceMatrix a = fgc::random_state(s, nd);
          fgc::CovarianceMatrix b =
              fgc::random_state(fgc::derive_seed(s, 1), nd);
          const double reference =
              fgc::dense::fidelity(fgc::dense::state_from_covariance(a),
                                   fgc::dense::state_from_covariance(b));
          return std::abs(fgc::fidelity(a, b) - reference);
        });

    suite.property(
        "dense_overlap_match", 1e-10, dense_trials, [nd](std::uint64_t s) {
          fgc::CovarianceMatrix a = fgc::random_state(s, nd);
          fgc::CovarianceMatrix b =
              fgc::random_state(fgc::derive_seed(s, 1), nd);
          const double reference =
              (fgc::dense::state_from_covariance(a) *
               fgc::dense::state_from_covariance(b))
                  .trace()
                  .real();
          return std::abs(fgc::overlap(a, b) - reference);
        });

    suite.property(
        "dense_relative_entropy_monotonicity", 1e-8, dense_trials,
        [nd](std::uint64_t s) {
          fgc::CovarianceMatrix a = fgc::random_state(s, nd);
          fgc::CovarianceMatrix b =
              fgc::random_state(fgc::derive_seed(s, 1), nd);
          fgc::Dilation d = fgc::random_dilation(fgc::derive_seed(s, 2), nd, 1);
          fgc::dense::Superoperator ch = fgc::dense::channel_from_dilation(d);
          Eigen::MatrixXcd ad = fgc::dense::state_from_covariance(a);
          Eigen::MatrixXcd bd = fgc::dense::state_from_covariance(b);
          const double before = fgc::dense::relative_entropy(ad, bd);
          const double after = fgc::dense::relative_entropy(ch.apply(ad),
                                                            ch.apply(bd));
          return std::max(0.0, after - before);
        });
  }

  return suite.report() ? kExitOk : kExitVerifyFailed;
}

// ---------------------------------------------------------------------------
// bench: seeded timing table.

struct BenchRow {
  std::string op;
  int n = 0;
  double mean_ms = 0.0;
  double std_ms = 0.0;
};

template <typename Setup, typename Work>
BenchRow time_operation(const std::string& op, int n, int reps, Setup&& setup,
                        Work&& work) {
  std::vector<double> samples;
  samples.reserve(static_cast<size_t>(reps));
  auto context = setup();
  for (int r = 0; r < reps; ++r) {
    const auto start = std::chrono::steady_clock::now();
    work(context);
    const auto stop = std::chrono::steady_clock::now();
    samples.push_back(
        std::chrono::duration<double, std::milli>(stop - start).count());
  }
  BenchRow row{op, n, 0.0, 0.0};
  for (double v : samples) row.mean_ms += v;
  row.mean_ms /= static_cast<double>(samples.size());
  double acc = 0.0;
  for (double v : samples) acc += (v - row.mean_ms) * (v - row.mean_ms);
  if (samples.size() > 1) {
    row.std_ms = std::sqrt(acc / static_cast<double>(samples.size() - 1));
  }
  return row;
}

double fitted_exponent(const std::vector<BenchRow>& rows,
                       const std::string& op) {
  std::vector<double> x;
  std::vector<double> y;
  for (const BenchRow& row : rows) {
    if (row.op != op) continue;
    x.push_back(std::log(2.0 * row.n));
    y.push_back(std::log(std::max(row.mean_ms, 1e-6)));
  }
  const double count = static_cast<double>(x.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  const double denom = count * sxx - sx * sx;
  return denom == 0.0 ? 0.0 : (count * sxy - sx * sy) / denom;
}

int run_bench(const std::vector<int>& sizes, int reps, std::uint64_t seed) {
  std::vector<BenchRow> rows;
  for (int n : sizes) {
    const std::uint64_t s = fgc::derive_seed(seed, static_cast<uint64_t>(n));
    rows.push_back(time_operation(
        "canonical_decompose", n, reps,
        [&] {
          std::mt19937_64 rng(s);
          return fgc::random_antisymmetric(rng, n);
        },
        [](const fgc::AntisymmetricMatrix& m) {
          volatile double sink = fgc::canonical_decompose(m).williamson[0];
          (void)sink;
        }));
    rows.push_back(time_operation(
        "pfaffian", n, reps,
        [&] {
          std::mt19937_64 rng(s + 1);
          return fgc::random_antisymmetric(rng, n);
        },
        [](const fgc::AntisymmetricMatrix& m) {
          volatile double sink = fgc::pfaffian_log(m).log_abs;
          (void)sink;
        }));
    rows.push_back(time_operation(
        "petz", n, reps,
        [&] {
          return std::make_pair(fgc::random_state(s + 2, n),
                                fgc::random_channel(s + 3, n, 1));
        },
        [](const std::pair<fgc::CovarianceMatrix,
                           fgc::GaussianCPTPChannel>& inst) {
          volatile double sink =
              fgc::petz(inst.first, inst.second).linear()(0, 0);
          (void)sink;
        }));
    rows.push_back(time_operation(
        "fidelity", n, reps,
        [&] {
          return std::make_pair(fgc::random_state(s + 4, n),
                                fgc::random_state(s + 5, n));
        },
        [](const std::pair<fgc::CovarianceMatrix, fgc::CovarianceMatrix>&
               inst) {
          volatile double sink = fgc::fidelity(inst.first, inst.second);
          (void)sink;
        }));
  }

  std::printf("op,n,mean_ms,std_ms\n");
  for (const BenchRow& row : rows) {
    std::printf("%s,%d,%.3f,%.3f\n", row.op.c_str(), row.n, row.mean_ms,
                row.std_ms);
  }
  for (const std::string& op :
       {std::string("canonical_decompose"), std::string("pfaffian"),
        std::string("petz"), std::string("fidelity")}) {
    std::printf("# exponent,%s,%.2f\n", op.c_str(),
                fitted_exponent(rows, op));
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fermionic Gaussian states, channels, and recovery maps"};
  app.require_subcommand(1);

  std::string path_a, path_b, path_c;
  double t = 0.0;
  bool on_support = false;
  std::string kind;
  std::string out_path;
  std::uint64_t seed = 0;
  int n = 2;
  int m = 1;
  int trials = 25;
  bool with_dense = false;
  double tol_override = 0.0;
  std::vector<int> sizes{8, 32, 128};
  int reps = 5;

  CLI::App* validate =
      app.add_subcommand("validate", "check a state or channel document");
  validate->add_option("path", path_a, "state or channel JSON file")
      ->required();

  CLI::App* petz_cmd = app.add_subcommand(
      "petz", "build the recovery channel anchored at a reference state");
  petz_cmd->add_option("sigma", path_a, "reference state JSON")->required();
  petz_cmd->add_option("channel", path_b, "channel JSON")->required();
  petz_cmd->add_option("out", path_c, "output channel JSON")->required();
  CLI::Option* t_opt = petz_cmd->add_option(
      "--t", t, "rotation parameter of the rotated recovery map");
  CLI::Option* support_flag = petz_cmd->add_flag(
      "--support", on_support,
      "restrict the construction to the mixed block of N(sigma)");
  t_opt->excludes(support_flag);

  CLI::App* fidelity_cmd =
      app.add_subcommand("fidelity", "fidelity and overlap of two states");
  fidelity_cmd->add_option("state_a", path_a, "first state JSON")->required();
  fidelity_cmd->add_option("state_b", path_b, "second state JSON")
      ->required();

  CLI::App* apply_cmd =
      app.add_subcommand("apply", "apply a channel to a state");
  apply_cmd->add_option("channel", path_a, "channel JSON")->required();
  apply_cmd->add_option("state", path_b, "input state JSON")->required();
  apply_cmd->add_option("out", path_c, "output state JSON")->required();

  CLI::App* compose_cmd = app.add_subcommand(
      "compose", "compose two channel documents (second after first)");
  compose_cmd->add_option("first", path_a, "first map JSON")->required();
  compose_cmd->add_option("second", path_b, "second map JSON")->required();
  compose_cmd->add_option("out", path_c, "output map JSON")->required();

  CLI::App* random_cmd =
      app.add_subcommand("random", "emit a seeded random object");
  random_cmd->add_option("kind", kind, "state | channel | dilation")
      ->required()
      ->check(CLI::IsMember({"state", "channel", "dilation"}));
  random_cmd->add_option("out", out_path, "output JSON path")->required();
  random_cmd->add_option("--seed", seed, "master seed");
  random_cmd->add_option("--n", n, "system mode count");
  random_cmd->add_option("--m", m, "environment mode count");

  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "run the seeded property suite (byte-identical per seed)");
  verify_cmd->add_option("--seed", seed, "master seed");
  verify_cmd->add_option("--n", n, "mode count for the properties");
  verify_cmd->add_option("--trials", trials, "trials per property");
  verify_cmd->add_flag("--dense", with_dense,
                       "include the exponential-cost dense-oracle checks");
  verify_cmd->add_option(
      "--tol", tol_override,
      "override every property limit (harness self-test hook)");

  CLI::App* bench_cmd =
      app.add_subcommand("bench", "CSV timing table with fitted exponents");
  bench_cmd->add_option("--sizes", sizes, "mode counts to time")
      ->delimiter(',');
  bench_cmd->add_option("--reps", reps, "repetitions per measurement");
  bench_cmd->add_option("--seed", seed, "master seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitInvalid;
  }

  try {
    if (app.got_subcommand(validate)) return run_validate(path_a);
    if (app.got_subcommand(petz_cmd)) {
      return run_petz(path_a, path_b, path_c, t, on_support);
    }
    if (app.got_subcommand(fidelity_cmd)) return run_fidelity(path_a, path_b);
    if (app.got_subcommand(apply_cmd)) {
      return run_apply(path_a, path_b, path_c);
    }
    if (app.got_subcommand(compose_cmd)) {
      return run_compose(path_a, path_b, path_c);
    }
    if (app.got_subcommand(random_cmd)) {
      return run_random(kind, out_path, seed, n, m);
    }
    if (app.got_subcommand(verify_cmd)) {
      return run_verify(seed, n, trials, with_dense, tol_override);
    }
    if (app.got_subcommand(bench_cmd)) return run_bench(sizes, reps, seed);
  } catch (const fgc::io::IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kExitIo;
  } catch (const fgc::io::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitIo;
  } catch (const fgc::FaithfulnessError& e) {
    std::cerr << "faithfulness error: " << e.what() << "\n";
    if (app.got_subcommand(petz_cmd)) {
      try {
        fgc::CovarianceMatrix sigma = fgc::io::read_state(path_a);
        fgc::GaussianChannelData data = fgc::io::read_channel(path_b);
        fgc::GaussianCPTPChannel ch(data.A, data.B);
        print_support_report(fgc::apply(ch, sigma));
      } catch (const fgc::Error&) {
      }
    }
    return kExitFaithfulness;
  } catch (const fgc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitOk;
}
