#include "qmch/index_set.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include "qmch/decay.hpp"
#include "qmch/errors.hpp"

namespace qmch {

std::optional<std::size_t> IndexSet::find(const FrequencyVector& h) const {
  auto it = std::lower_bound(members.begin(), members.end(), h,
                             [](const FrequencyVector& a, const FrequencyVector& b) {
                               return canonical_less(a, b);
                             });
  if (it != members.end() && *it == h) return static_cast<std::size_t>(it - members.begin());
  return std::nullopt;
}

IndexSet IndexSet::from_members(BasisKind kind, std::size_t dimension,
                                std::vector<FrequencyVector> members) {
  for (auto& m : members) {
    if (m.dim() != dimension) throw ConfigError("index set members must share the dimension");
    if (m.kind != kind) throw ConfigError("index set members must share the basis kind");
    m.validate();
  }
  std::sort(members.begin(), members.end(), canonical_less);
  members.erase(std::unique(members.begin(), members.end()), members.end());
  IndexSet set;
  set.kind = kind;
  set.dimension = dimension;
  set.members = std::move(members);
  set.provenance.tag = Provenance::Tag::kExplicit;
  return set;
}

namespace {

struct CrossEnumerator {
  std::size_t dimension;
  double threshold;
  const ProductWeights& weights;
  BasisKind kind;
  std::uint32_t base;
  std::size_t cap;
  std::vector<FrequencyVector> out;
  std::vector<std::int64_t> current;

  // The per-member membership test r(h)^2 <= threshold is the single source
  // of truth; loops extend each coordinate until the partial product fails.
  void recurse(std::size_t j, double partial) {
    if (j == dimension) {
      if (out.size() >= cap)
        throw ResourceCapError("hyperbolic cross exceeds the cardinality cap");
      FrequencyVector v;
      v.kind = kind;
      v.comps = current;
      out.push_back(std::move(v));
      return;
    }
    current[j] = 0;
    recurse(j + 1, partial);
    const double gj = weights.gamma(j + 1);
    if (gj == 0.0) return;
    if (kind == BasisKind::kTrig) {
      for (std::int64_t h = 1;; ++h) {
        const double r = partial * std::pow(static_cast<double>(h), weights.alpha()) / gj;
        if (r * r > threshold) break;
        current[j] = -h;
        recurse(j + 1, r);
        current[j] = h;
        recurse(j + 1, r);
      }
    } else {
      for (std::int64_t h = 1;; ++h) {
        const auto m = mu1(static_cast<std::uint64_t>(h), base);
        const double r = partial * std::pow(static_cast<double>(base), weights.alpha() * m) / gj;
        if (r * r > threshold) break;  // mu1 is non-decreasing in h
        current[j] = h;
        recurse(j + 1, r);
      }
    }
    current[j] = 0;
  }
};

}  // namespace

IndexSet enumerate_cross(std::size_t dimension, double threshold, const ProductWeights& w,
                         BasisKind kind, std::uint32_t base, std::size_t cap) {
  if (!(threshold >= 1.0)) throw ConfigError("hyperbolic cross threshold must be >= 1");
  CrossEnumerator e{dimension, threshold, w, kind, base, cap, {}, {}};
  e.current.assign(dimension, 0);
  e.recurse(0, 1.0);
  std::sort(e.out.begin(), e.out.end(), canonical_less);
  IndexSet set;
  set.kind = kind;
  set.dimension = dimension;
  set.members = std::move(e.out);
  set.provenance.tag = Provenance::Tag::kHyperbolic;
  set.provenance.threshold = threshold;
  {
    std::ostringstream os;
    os << "alpha=" << w.alpha() << " gamma=" << w.gamma_rule().spec();
    set.provenance.weight_spec = os.str();
  }
  return set;
}

double cardinality_bound(std::size_t dimension, double threshold, const ProductWeights& w,
                         double lambda, BasisKind kind, std::uint32_t base) {
  if (!(lambda > 1.0 / (2.0 * w.alpha())))
    throw ConfigError("cardinality bound requires lambda > 1/(2 alpha)");
  double prod = 1.0;
  if (kind == BasisKind::kTrig) {
    const double z = zeta(2.0 * w.alpha() * lambda);
    for (std::size_t j = 1; j <= dimension; ++j) {
      const double g = w.gamma(j);
      prod *= 1.0 + 2.0 * std::pow(g, 2.0 * lambda) * z;
    }
  } else {
    if (lambda > 1.0) throw ConfigError("walsh cardinality bound requires lambda <= 1");
    const double b = static_cast<double>(base);
    const double denom = std::pow(b, 2.0 * w.alpha() * lambda) - b;
    for (std::size_t j = 1; j <= dimension; ++j) {
      const double g = w.gamma(j);
      prod *= 1.0 + g * g * (b - 1.0) / denom;
    }
  }
  return std::pow(threshold, lambda) * prod;
}

std::uint64_t digitwise_sub(std::uint64_t a, std::uint64_t b, std::uint32_t base) {
  std::uint64_t out = 0, place = 1;
  while (a != 0 || b != 0) {
    const std::uint64_t da = a % base, db = b % base;
    out += ((da + base - db) % base) * place;
    place *= base;
    a /= base;
    b /= base;
  }
  return out;
}

std::uint64_t digitwise_add(std::uint64_t a, std::uint64_t b, std::uint32_t base) {
  std::uint64_t out = 0, place = 1;
  while (a != 0 || b != 0) {
    out += ((a % base + b % base) % base) * place;
    place *= base;
    a /= base;
    b /= base;
  }
  return out;
}

IndexSet minkowski_sum(const IndexSet& set) {
  std::vector<FrequencyVector> out;
  out.reserve(set.size() * set.size());
  for (const auto& a : set.members) {
    for (const auto& b : set.members) {
      FrequencyVector v;
      v.kind = set.kind;
      v.comps.resize(set.dimension);
      for (std::size_t j = 0; j < set.dimension; ++j) v.comps[j] = a.comps[j] + b.comps[j];
      out.push_back(std::move(v));
    }
  }
  auto result = IndexSet::from_members(set.kind, set.dimension, std::move(out));
  result.provenance.tag = Provenance::Tag::kDoubled;
  return result;
}

IndexSet minkowski_diff(const IndexSet& set, std::uint32_t base) {
  std::vector<FrequencyVector> out;
  out.reserve(set.size() * set.size());
  for (const auto& a : set.members) {
    for (const auto& b : set.members) {
      FrequencyVector v;
      v.kind = set.kind;
      v.comps.resize(set.dimension);
      for (std::size_t j = 0; j < set.dimension; ++j) {
        if (set.kind == BasisKind::kTrig) {
          v.comps[j] = a.comps[j] - b.comps[j];
        } else {
          v.comps[j] = static_cast<std::int64_t>(
              digitwise_sub(static_cast<std::uint64_t>(a.comps[j]),
                            static_cast<std::uint64_t>(b.comps[j]), base));
        }
      }
      out.push_back(std::move(v));
    }
  }
  auto result = IndexSet::from_members(set.kind, set.dimension, std::move(out));
  result.provenance.tag = Provenance::Tag::kDoubled;
  return result;
}

void write_index_set(std::ostream& os, const IndexSet& set) {
  os << (set.kind == BasisKind::kTrig ? "trig" : "walsh") << ' ' << set.dimension << ' '
     << set.size() << '\n';
  for (const auto& m : set.members) {
    for (std::size_t j = 0; j < m.comps.size(); ++j) {
      if (j) os << ' ';
      os << m.comps[j];
    }
    os << '\n';
  }
}

IndexSet read_index_set(std::istream& is) {
  std::string basis;
  std::size_t d = 0, count = 0;
  if (!(is >> basis >> d >> count)) throw ConfigError("bad index set header");
  BasisKind kind;
  if (basis == "trig") {
    kind = BasisKind::kTrig;
  } else if (basis == "walsh") {
    kind = BasisKind::kWalsh;
  } else {
    throw ConfigError("unknown basis: " + basis);
  }
  std::vector<FrequencyVector> members;
  members.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    FrequencyVector v;
    v.kind = kind;
    v.comps.resize(d);
    for (std::size_t j = 0; j < d; ++j) {
      if (!(is >> v.comps[j])) throw ConfigError("truncated index set");
    }
    members.push_back(std::move(v));
  }
  return IndexSet::from_members(kind, d, std::move(members));
}

}  // namespace qmch
