#include "zfarkas/eclass.hpp"

#include <algorithm>
#include <unordered_set>

namespace zfarkas {

SignPartition SignPartition::of(const IntVector& v) {
  SignPartition p;
  for (Index i = 0; i < v.size(); ++i) {
    const int s = v(i).sign();
    (s > 0 ? p.pos : s < 0 ? p.neg : p.zero).push_back(i);
  }
  return p;
}

std::vector<Index> SignPartition::support() const {
  std::vector<Index> s;
  std::merge(pos.begin(), pos.end(), neg.begin(), neg.end(), std::back_inserter(s));
  return s;
}

DivisorVector::DivisorVector(IntVector vec) : v(std::move(vec)), partition(SignPartition::of(v)) {
  if (partition.support_size() == 0) throw InvalidArgument("divisor vector must be nonzero");
}

LvIndexMap LvIndexMap::of(const SignPartition& partition) {
  LvIndexMap m;
  const auto support = partition.support();
  for (std::size_t a = 0; a < support.size(); ++a) {
    for (std::size_t b = a + 1; b < support.size(); ++b) m.pair_coords.emplace_back(support[a], support[b]);
  }
  m.zero_coords = partition.zero;
  return m;
}

std::vector<DivisorVector> divisor_candidates(const Lattice& lattice, Index max_support) {
  if (lattice.is_zero()) throw InvalidArgument("divisor_candidates: zero lattice");
  const IntVector d = lattice.projection_gcds();
  std::vector<Index> support;
  for (Index i = 0; i < d.size(); ++i) {
    if (!d(i).is_zero()) support.push_back(i);
  }
  const auto s = static_cast<Index>(support.size());
  if (s > max_support) {
    throw ResourceLimit("divisor search over 2^" + std::to_string(s) + " sign patterns exceeds cap 2^" +
                        std::to_string(max_support));
  }
  std::vector<DivisorVector> out;
  const std::uint64_t patterns = std::uint64_t{1} << s;
  for (std::uint64_t bits = 0; bits < patterns; ++bits) {
    IntVector v = d;
    for (Index k = 0; k < s; ++k) {
      // Bit for the first support coordinate is the most significant.
      if ((bits >> (s - 1 - k)) & 1U) v(support[static_cast<std::size_t>(k)]) = -v(support[static_cast<std::size_t>(k)]);
    }
    if (lattice.contains(v)) out.emplace_back(std::move(v));
  }
  return out;
}

IntVector lv_apply(const DivisorVector& div, const LvIndexMap& map, const IntVector& t) {
  if (t.size() != div.v.size()) throw DimensionMismatch("lv_apply: length mismatch");
  auto quotient = [&](Index i) {
    if (!divides(div.v(i), t(i))) {
      throw PreconditionViolated("lv_apply: " + div.v(i).to_string() + " does not divide " +
                                 t(i).to_string());
    }
    return exact_div(t(i), div.v(i));
  };
  IntVector out(map.output_dim());
  Index k = 0;
  for (const auto& [i, j] : map.pair_coords) out(k++) = quotient(i) - quotient(j);
  for (Index i : map.zero_coords) out(k++) = t(i);
  return out;
}

Lattice lv_image(const Lattice& lattice, const DivisorVector& div) {
  const auto map = LvIndexMap::of(div.partition);
  IntMatrix images(lattice.rank(), map.output_dim());
  for (Index k = 0; k < lattice.rank(); ++k) {
    images.row(k) = lv_apply(div, map, lattice.basis_vector(k)).transpose();
  }
  return Lattice::from_generators(map.output_dim(), images);
}

namespace {

class CertificateSearch {
 public:
  explicit CertificateSearch(const CertifyOptions& options) : options_(options) {}

  std::optional<EClassCertificate> run(const Lattice& lattice) {
    if (failed_.contains(lattice.key())) return std::nullopt;
    std::vector<DivisorVector> candidates;
    try {
      candidates = divisor_candidates(lattice, options_.max_support);
    } catch (const ResourceLimit&) {
      truncated_ = true;
      return std::nullopt;
    }
    const bool was_truncated = truncated_;
    for (auto& div : candidates) {
      auto map = LvIndexMap::of(div.partition);
      if (map.output_dim() > options_.max_ambient_dim && lattice.rank() > 1) {
        truncated_ = true;
        continue;
      }
      Lattice image = lv_image(lattice, div);
      if (image.rank() != lattice.rank() - 1) {
        throw InternalInconsistency("L_v image has rank " + std::to_string(image.rank()) +
                                    ", expected " + std::to_string(lattice.rank() - 1));
      }
      std::shared_ptr<const EClassCertificate> child;
      if (!image.is_zero()) {
        auto sub = run(image);
        if (!sub) continue;
        child = std::make_shared<const EClassCertificate>(std::move(*sub));
      }
      return EClassCertificate{lattice, std::move(div), std::move(map), std::move(child)};
    }
    // Only a complete search proves non-membership.
    if (truncated_ == was_truncated) failed_.insert(lattice.key());
    return std::nullopt;
  }

  bool truncated() const { return truncated_; }

 private:
  CertifyOptions options_;
  std::unordered_set<std::string> failed_;
  bool truncated_ = false;
};

}  // namespace

std::optional<EClassCertificate> certify(const Lattice& lattice, const CertifyOptions& options) {
  if (lattice.is_zero()) throw InvalidArgument("certify: the zero lattice is not in the class");
  CertificateSearch search(options);
  auto cert = search.run(lattice);
  if (!cert && search.truncated()) {
    throw ResourceLimit("certify: search space exceeds the configured caps");
  }
  return cert;
}

}  // namespace zfarkas
