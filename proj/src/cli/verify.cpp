#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "powsum/errors.hpp"
#include "powsum/gaussmix.hpp"
#include "powsum/ranges.hpp"
#include "powsum/secant.hpp"
#include "powsum/verify.hpp"
#include "powsum/witness.hpp"

namespace powsum::cli {

namespace {

using polyring::Form;

struct Outcome {
    bool passed;
    std::string detail;
};

struct Check {
    std::string id;
    std::string anchor;
    std::string claim;
    std::function<Outcome()> run;
};

std::vector<Form> witness_set(std::size_t n, bool inject_duplicate) {
    auto forms = witness::binomial_set(n).forms;
    if (inject_duplicate) forms.push_back(forms.front());
    return forms;
}

std::vector<Check> build_checks(const VerifyOptions& opt) {
    const secant::FieldKind kind = opt.level == Level::full ? secant::FieldKind::rational : secant::FieldKind::prime;
    const witness::FieldChoice field{kind, opt.prime};
    std::vector<Check> checks;

    const std::size_t expected_ranks[] = {6, 24, 70, 165};
    for (std::size_t n = 2; n <= 5; ++n) {
        const std::size_t want = expected_ranks[n - 2];
        checks.push_back({"c0" + std::to_string(n - 1) + "-skew-n" + std::to_string(n), "Thm skewness",
                          "binomial set tangent spaces are skew, rank " + std::to_string(want),
                          [=] {
                              const auto forms = witness_set(n, opt.inject_duplicate);
                              const auto r = secant::check_skewness(forms, 3, kind, opt.prime);
                              return Outcome{r.skew && r.rank == want,
                                             "rank " + std::to_string(r.rank) + " / expected " +
                                                 std::to_string(r.expected) + " over " + secant::to_string(kind)};
                          }});
    }
    for (std::size_t n = 2; n <= 5; ++n) {
        checks.push_back({"c0" + std::to_string(n + 3) + "-contact-n" + std::to_string(n), "Thm contact locus",
                          "contact kernel has dimension 1 at every point of the binomial set",
                          [=] {
                              const auto forms = witness_set(n, opt.inject_duplicate);
                              const auto cert = witness::certify_points(forms, 3, field);
                              std::ostringstream dims;
                              for (const auto k : cert.contact_kernel_dims) dims << k << ' ';
                              return Outcome{cert.verdict == witness::Verdict::pass,
                                             std::string(witness::to_string(cert.verdict)) + " kernel dims [ " +
                                                 dims.str() + "]"};
                          }});
    }
    checks.push_back({"c09-crossover", "Cor identifiability, n > 16",
                      "side condition fails for n <= 16 and holds for 17 <= n <= 40",
                      [] {
                          for (std::size_t n = 2; n <= 40; ++n) {
                              const bool defined = ranges::identifiability_bound_general(n, 2, 3).has_value();
                              if (defined != (n > 16))
                                  return Outcome{false, "wrong verdict at n = " + std::to_string(n)};
                          }
                          const auto side = ranges::identifiability_side_condition(16, 2, 3);
                          const bool exact = side.lhs == 270 && side.rhs == 263;
                          return Outcome{exact, "n = 16: " + side.lhs.get_str() + " vs " + side.rhs.get_str()};
                      }});
    checks.push_back({"c10-bound-values", "Cor identifiability bound", "bound is 333 at n = 17 and 632 at n = 20",
                      [] {
                          const auto b17 = ranges::identifiability_bound_general(17, 2, 3);
                          const auto b20 = ranges::identifiability_bound_general(20, 2, 3);
                          const bool ok = b17 && b20 && *b17 == 333 && *b20 == 632;
                          return Outcome{ok, "n=17: " + (b17 ? b17->get_str() : "none") +
                                                 ", n=20: " + (b20 ? b20->get_str() : "none")};
                      }});
    checks.push_back({"c11-general-d", "Thm general d", "minimal n is 17 for d = 3 and 6 for d = 4",
                      [] {
                          const auto r3 = ranges::general_d_region(2, 3);
                          const auto r4 = ranges::general_d_region(2, 4);
                          const bool ok = r3.min_n == std::size_t{17} && r4.min_n == std::size_t{6};
                          return Outcome{ok, "d=3: " + (r3.min_n ? std::to_string(*r3.min_n) : "none") +
                                                 ", d=4: " + (r4.min_n ? std::to_string(*r4.min_n) : "none")};
                      }});
    checks.push_back({"c12-probe-nondefective", "Secant dimension (Nenashev range)",
                      "random probe at (n,k,d,m) = (3,2,3,4) reaches rank 24",
                      [=] {
                          const auto r = secant::random_terracini_probe({3, 2, 3, 4}, 3, opt.seed, {opt.prime, false});
                          return Outcome{r.rank == 24 && r.skew, "max rank " + std::to_string(r.rank)};
                      }});
    checks.push_back({"c13-probe-square-defect", "Square identity",
                      "random probe at (n,k,d,m) = (2,2,2,2) never exceeds rank 5",
                      [=] {
                          const auto r = secant::random_terracini_probe({2, 2, 2, 2}, 20, opt.seed, {opt.prime, false});
                          return Outcome{r.rank <= 5 && !r.skew, "max rank " + std::to_string(r.rank) + " of 6"};
                      }});
    checks.push_back({"c14-square-identity", "Square identity",
                      "q1^2 + q2^2 = 1/2 (q1 + q2)^2 + 1/2 (q1 - q2)^2 on random pairs",
                      [=] {
                          std::mt19937_64 rng(opt.seed);
                          for (int trial = 0; trial < 100; ++trial) {
                              const Form q1 = secant::random_form(3, 2, rng), q2 = secant::random_form(3, 2, rng);
                              const Form lhs = q1 * q1 + q2 * q2;
                              const Form rhs = Rational(1, 2) * polyring::power(q1 + q2, 2) +
                                               Rational(1, 2) * polyring::power(q1 - q2, 2);
                              if (!(lhs == rhs)) return Outcome{false, "identity failed at trial " + std::to_string(trial)};
                          }
                          return Outcome{true, "100 random pairs"};
                      }});
    checks.push_back({"c15-binomial-stability", "Binomial set stability",
                      "B_n under X_n -> X_1 equals B_(n-1) plus 4 X1^2",
                      [] {
                          for (std::size_t n = 3; n <= 6; ++n) {
                              std::vector<std::size_t> assign(n);
                              for (std::size_t i = 0; i < n; ++i) assign[i] = i;
                              assign[n - 1] = 0;
                              std::vector<Form> image;
                              for (const auto& p : witness::binomial_set(n).forms)
                                  image.push_back(polyring::substitute(p, assign, n - 1));
                              auto want = witness::binomial_set(n - 1).forms;
                              want.push_back(Rational(4) * polyring::power(Form::variable(n - 1, 0), 2));
                              auto contains_all = [](const std::vector<Form>& a, const std::vector<Form>& b) {
                                  for (const auto& x : a) {
                                      bool found = false;
                                      for (const auto& y : b) found = found || x == y;
                                      if (!found) return false;
                                  }
                                  return true;
                              };
                              if (!contains_all(image, want) || !contains_all(want, image))
                                  return Outcome{false, "set mismatch at n = " + std::to_string(n)};
                          }
                          return Outcome{true, "n = 3..6"};
                      }});
    checks.push_back({"c16-moment-law", "Moment generating series",
                      "moments from exp(q) agree with pair-partition sums; directional (2d-1)!! law",
                      [=] {
                          std::mt19937_64 rng(opt.seed);
                          for (int trial = 0; trial < 10; ++trial) {
                              const std::size_t n = 1 + trial % 3;
                              auto cov = gaussmix::CovarianceForm::from_sigma(gaussmix::random_psd(n, rng));
                              gaussmix::MixtureModel model{{cov}, {Rational(1)}};
                              for (unsigned deg = 0; deg <= 6; deg += 2)
                                  for (const auto& alpha : polyring::monomials(n, deg))
                                      if (gaussmix::moment_of_monomial(model, alpha) !=
                                          gaussmix::isserlis_oracle(cov.sigma(), alpha))
                                          return Outcome{false, "moment mismatch at trial " + std::to_string(trial)};
                          }
                          return Outcome{true, "10 random covariances, |alpha| <= 6"};
                      }});
    checks.push_back({"c17-weight-recovery", "Weight recovery",
                      "degree 4 and 6 moments determine the mixing weights",
                      [=] {
                          std::mt19937_64 rng(opt.seed);
                          std::vector<Form> qs;
                          for (int i = 0; i < 3; ++i) qs.push_back(secant::random_form(3, 2, rng, -9, 9));
                          const std::vector<Rational> w{Rational(1, 6), Rational(1, 3), Rational(1, 2)};
                          Form lower(3, 4);
                          std::vector<gaussmix::ScaledForm> comps;
                          for (int i = 0; i < 3; ++i) {
                              lower += w[i] * polyring::power(qs[i], 2);
                              comps.push_back({w[i], qs[i]});
                          }
                          const auto rec = gaussmix::recover_mixing_weights(comps, lower, 3);
                          return Outcome{rec.weights == w, "recovered " + rec.weights[0].get_str() + ", " +
                                                               rec.weights[1].get_str() + ", " +
                                                               rec.weights[2].get_str()};
                      }});
    return checks;
}

}  // namespace

std::vector<CheckResult> verify_paper(const VerifyOptions& options) {
    const auto checks = build_checks(options);
    std::vector<CheckResult> results(checks.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < static_cast<long>(checks.size()); ++i) {
        const auto& check = checks[i];
        CheckResult& r = results[i];
        r.id = check.id;
        r.anchor = check.anchor;
        r.claim = check.claim;
        const auto start = std::chrono::steady_clock::now();
        try {
            const Outcome o = check.run();
            r.passed = o.passed;
            r.detail = o.detail;
        } catch (const std::exception& e) {
            r.passed = false;
            r.detail = std::string("error: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
    std::sort(results.begin(), results.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
    return results;
}

}  // namespace powsum::cli
