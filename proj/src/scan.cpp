#include "hypsurf/scan.hpp"

#include <cmath>
#include <complex>
#include <optional>
#include <sstream>

namespace hypsurf {

namespace {

double identity_distance(const Eigen::Matrix2d& m) {
  double plus = (m - Eigen::Matrix2d::Identity()).cwiseAbs().maxCoeff();
  double minus = (m + Eigen::Matrix2d::Identity()).cwiseAbs().maxCoeff();
  return std::min(plus, minus);
}

constexpr double kUnitRoundoff = 0x1p-53;

// Entrywise rounding error of a computed product of k matrices is at most
// prod |M_i| * (2u k + sum of relative letter errors), in Frobenius norm.
struct ErrorBound {
  double norm_product = 1;
  double relative = 0;

  double absolute(int len) const { return norm_product * (relative + 2 * kUnitRoundoff * len); }
};

// Whether the tag assigned to a computed matrix survives every perturbation
// within `err` (entrywise, Frobenius) of it.
bool survives(IsometryTag tag, double trace, double identity_dist, double err, const ScanOptions& o) {
  const double trace_err = 2 * err;
  switch (tag) {
    case IsometryTag::Identity:
      return identity_dist + err <= o.identity_tolerance;
    case IsometryTag::Hyperbolic:
      return std::abs(trace) - trace_err > 2 + o.classify_tolerance;
    case IsometryTag::Elliptic:
      return std::abs(trace) + trace_err < 2 - o.classify_tolerance;
    case IsometryTag::Parabolic:
      return trace_err <= o.classify_tolerance;
  }
  return false;
}

class Scanner {
 public:
  Scanner(const RepresentationAssignment& rho, const ScanOptions& opts, const Pullback* through)
      : rho_(rho), opts_(opts), presentation_(rho.genus), through_(through) {
    for (int k = 0; k < static_cast<int>(rho.images.size()); ++k) {
      // Letter error: images of base words carry the error of their own
      // evaluation, generators given directly are taken as exact.
      double rel = 0;
      if (through_) {
        const Word& img = through_->f.images[k];
        ErrorBound b = bound_in_base(img);
        rel = b.absolute(static_cast<int>(img.size())) / std::max(rho.images[k].matrix().norm(), 1.0);
      }
      for (const auto& g : {rho.images[k], rho.images[k].inverse()}) {
        letters_.push_back(g.matrix());
        norms_.push_back(g.matrix().norm());
        rel_.push_back(rel);
      }
    }
    if (through_) base_presentation_.emplace(through_->base.genus);
  }

  ScanReport run(int max_len) {
    report_.genus = rho_.genus;
    report_.max_length = max_len;
    for (int len = 1; len <= max_len && !report_.stopped_early; ++len) scan_length(len);
    return std::move(report_);
  }

 private:
  ErrorBound bound_in_base(const Word& w) const {
    ErrorBound b;
    for (Letter l : w) b.norm_product *= through_->base.image(generator_of(l)).matrix().norm();
    return b;
  }

  void scan_length(int len) {
    const int n = static_cast<int>(letters_.size());
    Word w(len, -1);
    std::vector<Eigen::Matrix2d> prefix(len, Eigen::Matrix2d::Identity());
    std::vector<ErrorBound> bounds(len);
    int depth = 0;
    while (depth >= 0) {
      Letter next = w[depth] + 1;
      if (depth > 0 && next == inverse_letter(w[depth - 1])) ++next;
      if (next >= n) {
        w[depth] = -1;
        --depth;
        continue;
      }
      w[depth] = next;
      const Eigen::Matrix2d& p = prefix[depth];
      const Eigen::Matrix2d& g = letters_[next];
      ErrorBound b{bounds[depth].norm_product * norms_[next], bounds[depth].relative + rel_[next]};
      if (depth + 1 < len) {
        prefix[depth + 1].noalias() = p * g;
        bounds[depth + 1] = b;
        ++depth;
        continue;
      }
      ++report_.words_scanned;
      double tr = p(0, 0) * g(0, 0) + p(0, 1) * g(1, 0) + p(1, 0) * g(0, 1) + p(1, 1) * g(1, 1);
      const double err = b.absolute(len);
      if (std::abs(tr) - 2 * err > 2 + opts_.classify_tolerance + 1e-6) {
        ++report_.class_counts[static_cast<int>(IsometryTag::Hyperbolic)];
        continue;
      }
      Eigen::Matrix2d m = p * g;
      if (!visit_slow(w, m, err)) {
        report_.stopped_early = true;
        return;
      }
    }
  }

  struct Verdict {
    IsometryTag tag;
    bool ambiguous;
    double trace;
    bool certified;
  };

  Verdict judge(const Eigen::Matrix2d& m, double err) const {
    if (!m.allFinite()) return {IsometryTag::Identity, false, 0, false};
    Isometryd e = Isometryd::from_unimodular(m);
    auto cls = classify(e, opts_.classify_tolerance);
    const double dist = identity_distance(m);
    IsometryTag tag = dist < opts_.identity_tolerance ? IsometryTag::Identity : cls.tag;
    return {tag, cls.tolerance_ambiguous, e.trace(), survives(tag, e.trace(), dist, err, opts_)};
  }

  // Re-evaluates a pullback word through its Dehn-reduced image in the base,
  // where cancellations between generator images happen symbolically. The
  // tag is a conjugacy invariant, so the image is also cyclically reduced.
  Verdict refine(const Word& w) const {
    Word img = cyclic_reduce(dehn_reduce(*base_presentation_, apply_hom(through_->f, w)));
    if (img.empty()) return {IsometryTag::Identity, false, 2, true};
    ErrorBound b = bound_in_base(img);
    return judge(evaluate(through_->base, img).matrix(), b.absolute(static_cast<int>(img.size())));
  }

  // Returns false to stop the scan.
  bool visit_slow(const Word& w, const Eigen::Matrix2d& m, double err) {
    Verdict v = judge(m, err);
    if (!v.certified && through_) v = refine(w);
    if (!v.certified) {
      ++report_.precision_limited_count;
      if (report_.precision_limited.size() < opts_.max_listed)
        report_.precision_limited.push_back({w, v.tag, v.trace});
      return true;
    }
    ++report_.class_counts[static_cast<int>(v.tag)];
    if (v.tag == IsometryTag::Identity) {
      if (!dehn_reduce(presentation_, w).empty()) {
        ++report_.kernel_witness_count;
        if (report_.kernel_witnesses.size() < opts_.max_listed) report_.kernel_witnesses.push_back(w);
      }
      return true;
    }
    if (v.tag == IsometryTag::Hyperbolic) return true;
    ClassifiedWord cw{w, v.tag, v.trace};
    if (v.ambiguous) {
      ++report_.ambiguous_count;
      if (report_.tolerance_ambiguous.size() < opts_.max_listed) report_.tolerance_ambiguous.push_back(cw);
    }
    if (!report_.first_non_hyperbolic) report_.first_non_hyperbolic = cw;
    return !opts_.stop_at_first_non_hyperbolic;
  }

  const RepresentationAssignment& rho_;
  ScanOptions opts_;
  SurfacePresentation presentation_;
  const Pullback* through_;
  std::optional<SurfacePresentation> base_presentation_;
  std::vector<Eigen::Matrix2d> letters_;
  std::vector<double> norms_;
  std::vector<double> rel_;
  ScanReport report_;
};

// Fixed point inside the upper half-plane of an elliptic element.
std::complex<double> elliptic_center(const Isometryd& g) {
  double tr = g.trace();
  double s = std::sqrt(std::max(0.0, 4 - tr * tr));
  std::complex<double> z((g.a() - g.d()) / (2 * g.c()), s / (2 * std::abs(g.c())));
  return z;
}

}  // namespace

ScanReport scan_classification(const RepresentationAssignment& rho, int max_len, const ScanOptions& opts) {
  validate(rho, opts.relator_check);
  return Scanner(rho, opts, nullptr).run(max_len);
}

ScanReport scan_pullback(const Pullback& through, int max_len, const ScanOptions& opts) {
  if (through.base.genus != through.f.target_genus)
    throw DomainError(ErrorKind::ConstructionInvalid, "homomorphism target genus does not match representation");
  validate(through.base);
  require_valid(through.f);
  const RepresentationAssignment rho = pullback(through.base, through.f);
  return Scanner(rho, opts, &through).run(max_len);
}

ElementaryCertificate is_elementary(const RepresentationAssignment& rho, double eps) {
  ElementaryCertificate out;
  std::optional<int> reference;
  IsometryTag ref_tag = IsometryTag::Identity;
  std::vector<BoundaryPoint<double>> ref_points;
  std::complex<double> ref_center;

  for (int k = 0; k < static_cast<int>(rho.images.size()); ++k) {
    const auto& g = rho.images[k];
    auto cls = classify(g, eps);
    if (cls.tag == IsometryTag::Identity) continue;
    bool elliptic = cls.tag == IsometryTag::Elliptic;
    if (!reference) {
      reference = k;
      ref_tag = cls.tag;
      if (elliptic) {
        ref_center = elliptic_center(g);
      } else {
        ref_points = fixed_points(g, eps);
      }
      continue;
    }
    bool same = false;
    if (elliptic || ref_tag == IsometryTag::Elliptic) {
      same = elliptic && ref_tag == IsometryTag::Elliptic && std::abs(elliptic_center(g) - ref_center) <= 1e-7;
    } else {
      auto pts = fixed_points(g, eps);
      // A parabolic and a hyperbolic element never share their full fixed set.
      same = pts.size() == ref_points.size();
      for (std::size_t i = 0; same && i < pts.size(); ++i) {
        bool found = false;
        for (const auto& q : ref_points) found = found || pts[i].is_approx(q, 1e-7);
        same = found;
      }
    }
    if (!same) {
      out.mismatch_generator = k;
      std::ostringstream os;
      os << generator_name(k) << " does not share the fixed points of " << generator_name(*reference);
      out.detail = os.str();
      return out;
    }
  }
  out.elementary = true;
  out.common_fixed_points = ref_points;
  out.detail = reference ? "all non-identity generators share " + std::string(generator_name(*reference)) + "'s fixed set"
                         : "all generator images are the identity";
  return out;
}

}  // namespace hypsurf
