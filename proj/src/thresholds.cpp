#include "tilinglab/thresholds.hpp"

#include <stdexcept>

#include "tilinglab/invariants.hpp"

namespace tilinglab {

namespace {

ThresholdVerdict pass(std::string id) {
  ThresholdVerdict v;
  v.passes = true;
  v.condition_id = std::move(id);
  return v;
}

ThresholdVerdict fail(std::string id, int index, Rat required, int actual) {
  ThresholdVerdict v;
  v.passes = false;
  v.condition_id = std::move(id);
  v.first_violation = Violation{index, required, actual};
  return v;
}

}  // namespace

nlohmann::json ThresholdVerdict::to_json() const {
  nlohmann::json j;
  j["passes"] = passes;
  j["condition_id"] = condition_id;
  if (first_violation) {
    j["first_violation"] = {{"index", first_violation->index},
                            {"required", first_violation->required.str()},
                            {"actual", first_violation->actual}};
  }
  return j;
}

Rat omega_from_params(int h, int r, const Rat& sigma) {
  if (r < 2) throw std::domain_error("r must be at least 2");
  if (!(sigma > Rat(0))) throw std::domain_error("sigma must be positive");
  if (!(sigma < Rat(h, r)))
    throw std::domain_error("sigma not below h/r = " + Rat(h, r).str());
  return (Rat(h) - sigma) / Rat(r - 1);
}

ThresholdVerdict check_main(const DegreeSequence& dseq, int h, int r,
                            const Rat& sigma, const Rat& eta) {
  Rat omega = omega_from_params(h, r, sigma);
  long long n = static_cast<long long>(dseq.size());
  Rat intercept = (Rat(1) - (omega + sigma) / Rat(h) + eta) * Rat(n);
  Rat slope = sigma / omega;
  long long top = (omega * Rat(n) / Rat(h)).floor();
  for (long long i = 1; i <= top; ++i) {
    Rat required = intercept + slope * Rat(i);
    if (Rat(dseq[i - 1]) < required)
      return fail("main", static_cast<int>(i), required, dseq[i - 1]);
  }
  return pass("main");
}

ThresholdVerdict check_ay_degseq(const DegreeSequence& dseq, int r, const Rat& eta) {
  if (r < 2) throw std::domain_error("r must be at least 2");
  long long n = static_cast<long long>(dseq.size());
  Rat base = Rat((r - 2) * n, r) + eta * Rat(n);
  for (long long i = 1; Rat(i) < Rat(n, r); ++i) {
    Rat required = base + Rat(i);
    if (Rat(dseq[i - 1]) < required)
      return fail("ay", static_cast<int>(i), required, dseq[i - 1]);
  }
  return pass("ay");
}

ThresholdVerdict check_kothm_dispatch(const DegreeSequence& dseq, const Graph& h,
                                      const Rat& eta) {
  HcfReport rep = hcf_report(h);
  if (rep.hcf_is_one) {
    auto v = check_main(dseq, h.order(), rep.chi, Rat(rep.sigma), eta);
    v.condition_id = "kothm(i):main";
    return v;
  }
  auto v = check_ay_degseq(dseq, rep.chi, eta);
  v.condition_id = "kothm(ii):ay";
  return v;
}

ThresholdVerdict check_min_degree(const DegreeSequence& dseq, const Rat& bound) {
  if (bound < Rat(0) || bound > Rat(1))
    throw std::domain_error("bound must lie in [0, 1]");
  if (dseq.empty()) return pass("mindeg");
  Rat required = bound * Rat(static_cast<long long>(dseq.size()));
  if (Rat(dseq.front()) < required) return fail("mindeg", 1, required, dseq.front());
  return pass("mindeg");
}

ThresholdVerdict check_chvatal(const DegreeSequence& dseq) {
  long long n = static_cast<long long>(dseq.size());
  if (n < 3) return fail("chvatal", 0, Rat(3), static_cast<int>(n));
  for (long long i = 1; 2 * i < n; ++i) {
    if (dseq[i - 1] >= i + 1) continue;
    if (dseq[n - i - 1] >= n - i) continue;
    return fail("chvatal", static_cast<int>(i), Rat(i + 1), dseq[i - 1]);
  }
  return pass("chvatal");
}

ThresholdVerdict check_bkt_conjecture(const DegreeSequence& dseq, int r) {
  if (r < 2) throw std::domain_error("r must be at least 2");
  long long n = static_cast<long long>(dseq.size());
  if (n % r != 0) throw std::domain_error("r must divide n");
  long long nr = n / r;
  for (long long i = 1; i < nr; ++i) {
    Rat required = Rat((r - 2) * n, r) + Rat(i);
    if (Rat(dseq[i - 1]) < required)
      return fail("bkt(alpha)", static_cast<int>(i), required, dseq[i - 1]);
  }
  if (nr + 1 <= n) {
    Rat required = Rat((r - 1) * n, r);
    if (Rat(dseq[nr]) < required)
      return fail("bkt(beta)", static_cast<int>(nr + 1), required, dseq[nr]);
  }
  return pass("bkt");
}

std::vector<std::pair<int, Rat>> threshold_curve(int h, int r, const Rat& sigma,
                                                 const Rat& eta, int n) {
  Rat omega = omega_from_params(h, r, sigma);
  Rat intercept = (Rat(1) - (omega + sigma) / Rat(h) + eta) * Rat(n);
  Rat slope = sigma / omega;
  Rat plateau = (Rat(1) - omega / Rat(h) + eta) * Rat(n);
  long long top = (omega * Rat(n) / Rat(h)).floor();
  std::vector<std::pair<int, Rat>> out;
  out.reserve(n);
  for (int i = 1; i <= n; ++i) {
    if (i <= top)
      out.emplace_back(i, intercept + slope * Rat(i));
    else
      out.emplace_back(i, plateau);
  }
  return out;
}

}  // namespace tilinglab
