#include "ssv/root_data.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "ssv/errors.hpp"
#include "ssv/rational_linalg.hpp"

namespace ssv {

namespace {

struct Factor {
  char type;
  std::size_t rank;
};

Factor parse_factor(const std::string& text, const std::string& label) {
  if (text.size() < 2 || !std::isdigit(static_cast<unsigned char>(text[1])))
    throw ParseError("malformed root datum label '" + label + "'");
  char type = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  for (std::size_t i = 1; i < text.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw ParseError("malformed root datum label '" + label + "'");
  if (text.size() > 3) throw RankError("root datum '" + label + "' exceeds the supported rank");
  std::size_t n = std::stoul(text.substr(1));
  if (n == 0) throw ParseError("rank must be positive in '" + label + "'");
  switch (type) {
    case 'A':
      break;
    case 'B':
    case 'C':
      if (n < 2) throw ParseError("types B and C need rank at least 2 in '" + label + "'");
      break;
    case 'D':
      if (n < 4) throw ParseError("type D needs rank at least 4 in '" + label + "'");
      break;
    default:
      throw ParseError("unsupported root system type in '" + label + "'");
  }
  return {type, n};
}

// Cartan block and half squared root lengths of a simple factor.
void factor_data(const Factor& f, IntegerMatrix& cartan, std::vector<Rational>& half,
                 std::size_t offset) {
  const std::size_t n = f.rank;
  for (std::size_t i = 0; i < n; ++i) {
    cartan(offset + i, offset + i) = 2;
    half[offset + i] = 1;
  }
  auto link = [&](std::size_t i, std::size_t j) {
    cartan(offset + i, offset + j) = -1;
    cartan(offset + j, offset + i) = -1;
  };
  if (f.type == 'D') {
    link(0, 1);
    link(1, 2);
    link(1, 3);
    return;
  }
  for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1);
  if (f.type == 'B') {
    // alpha_n short
    cartan(offset + n - 1, offset + n - 2) = -2;
    for (std::size_t i = 0; i + 1 < n; ++i) half[offset + i] = 2;
  } else if (f.type == 'C') {
    // alpha_n long
    cartan(offset + n - 2, offset + n - 1) = -2;
    half[offset + n - 1] = 2;
  }
}

}  // namespace

RootDatum RootDatum::from_label(const std::string& label) {
  std::vector<Factor> factors;
  std::size_t start = 0;
  for (;;) {
    std::size_t x = label.find_first_of("xX", start);
    factors.push_back(parse_factor(label.substr(start, x - start), label));
    if (x == std::string::npos) break;
    start = x + 1;
  }
  std::size_t total = 0;
  for (const auto& f : factors) total += f.rank;
  if (total > kMaxRootRank)
    throw RankError("root datum '" + label + "' has rank " + std::to_string(total) +
                    "; at most " + std::to_string(kMaxRootRank) + " is supported");

  RootDatum d;
  d.label_ = label;
  d.rank_ = total;
  d.cartan_ = IntegerMatrix(total, total);
  d.half_lengths_.assign(total, Rational(1));
  std::size_t offset = 0;
  for (const auto& f : factors) {
    factor_data(f, d.cartan_, d.half_lengths_, offset);
    offset += f.rank;
  }

  // A^T G = D, with D the diagonal of half squared lengths
  std::vector<RatVector> at(total, RatVector(total));
  for (std::size_t i = 0; i < total; ++i)
    for (std::size_t j = 0; j < total; ++j) at[i][j] = d.cartan_(j, i);
  std::vector<RatVector> at_inv = inverse(at);
  d.gram_.assign(total, RatVector(total));
  for (std::size_t i = 0; i < total; ++i)
    for (std::size_t j = 0; j < total; ++j) d.gram_[i][j] = at_inv[i][j] * d.half_lengths_[j];

  // roots are the W-translates of the simple roots; positivity is read off
  // from coordinates in the basis of simple roots
  std::vector<RatVector> a(total, RatVector(total));
  for (std::size_t i = 0; i < total; ++i)
    for (std::size_t j = 0; j < total; ++j) a[i][j] = d.cartan_(i, j);
  std::vector<RatVector> a_inv = inverse(a);
  std::set<Weight> roots;
  for (std::size_t j = 0; j < total; ++j)
    for (const auto& r : weyl_orbit(d, d.simple_root(j))) roots.insert(r);
  for (const auto& r : roots) {
    Rational first_nonzero = 0;
    for (std::size_t i = 0; i < total && first_nonzero == 0; ++i) {
      Rational c = 0;
      for (std::size_t k = 0; k < total; ++k) c += a_inv[i][k] * r[k];
      first_nonzero = c;
    }
    if (first_nonzero > 0) d.positive_roots_.push_back(r);
  }
  return d;
}

Weight RootDatum::simple_root(std::size_t j) const {
  Weight w(rank_);
  for (std::size_t i = 0; i < rank_; ++i) w[i] = cartan_(i, j);
  return w;
}

Rational RootDatum::form(const Weight& a, const Weight& b) const {
  if (a.size() != rank_ || b.size() != rank_) throw DimensionError("weight of wrong length");
  Rational s = 0;
  for (std::size_t i = 0; i < rank_; ++i)
    for (std::size_t j = 0; j < rank_; ++j) s += a[i] * gram_[i][j] * b[j];
  return s;
}

Weight RootDatum::reflect(std::size_t i, const Weight& lambda) const {
  Weight out = lambda;
  Rational c = lambda[i];
  for (std::size_t k = 0; k < rank_; ++k) out[k] -= c * cartan_(k, i);
  return out;
}

bool is_dominant(const Weight& lambda) {
  return std::all_of(lambda.begin(), lambda.end(), [](const Rational& x) { return x >= 0; });
}

std::vector<Weight> weyl_orbit(const RootDatum& d, const Weight& lambda) {
  if (lambda.size() != d.rank())
    throw DimensionError("weight has " + std::to_string(lambda.size()) + " coordinates; " +
                         d.label() + " has rank " + std::to_string(d.rank()));
  std::set<Weight> seen{lambda};
  std::vector<Weight> frontier{lambda};
  while (!frontier.empty()) {
    Weight w = std::move(frontier.back());
    frontier.pop_back();
    for (std::size_t i = 0; i < d.rank(); ++i) {
      Weight r = d.reflect(i, w);
      if (seen.insert(r).second) frontier.push_back(std::move(r));
    }
  }
  return {seen.begin(), seen.end()};
}

Integer weyl_dimension(const RootDatum& d, const Weight& lambda) {
  if (lambda.size() != d.rank()) throw DimensionError("weight of wrong length");
  if (!is_dominant(lambda) || !is_integral(lambda))
    throw NotDominantError("weight " + to_string(lambda) + " is not dominant integral");
  Weight shifted = lambda;
  for (auto& x : shifted) x += 1;
  Rational num = 1, den = 1;
  for (const auto& beta : d.positive_roots()) {
    num *= d.form(shifted, beta);
    den *= d.form(d.rho(), beta);
  }
  Rational dim = num / den;
  if (dim.get_den() != 1) throw DomainError("dimension formula returned a non-integer");
  return dim.get_num();
}

RationalPolytope dominant_hull(const RootDatum& d, const Weight& lambda) {
  if (!is_dominant(lambda)) throw NotDominantError("weight " + to_string(lambda) + " is not dominant");
  RationalPolytope hull = convex_hull(weyl_orbit(d, lambda));
  std::vector<Halfspace> ineqs = hull.facets();
  for (std::size_t i = 0; i < d.rank(); ++i) {
    IntVector e(d.rank());
    e[i] = 1;
    ineqs.push_back({e, Integer(0)});
  }
  auto p = polytope_from_inequalities(d.rank(), hull.equations(), ineqs);
  // lambda itself is dominant, so the intersection is never empty
  return *p;
}

std::vector<RationalPolytope> weyl_translates(const RootDatum& d, const RationalPolytope& p) {
  if (p.ambient_rank() != d.rank()) throw DimensionError("polytope and root datum ranks differ");
  std::set<std::vector<Weight>> seen{p.vertices()};
  std::vector<std::vector<Weight>> frontier{p.vertices()};
  while (!frontier.empty()) {
    auto verts = std::move(frontier.back());
    frontier.pop_back();
    for (std::size_t i = 0; i < d.rank(); ++i) {
      std::vector<Weight> r;
      for (const auto& v : verts) r.push_back(d.reflect(i, v));
      std::sort(r.begin(), r.end());
      if (seen.insert(r).second) frontier.push_back(std::move(r));
    }
  }
  std::vector<RationalPolytope> out;
  for (const auto& verts : seen) out.push_back(convex_hull(verts));
  return out;
}

bool is_w_admissible(const RootDatum& d, const RationalPolytope& p) {
  if (p.ambient_rank() != d.rank()) throw DimensionError("polytope and root datum ranks differ");
  std::vector<Halfspace> chamber;
  for (std::size_t i = 0; i < d.rank(); ++i) {
    IntVector e(d.rank());
    e[i] = 1;
    chamber.push_back({e, Integer(0)});
  }
  std::vector<Halfspace> ineqs = p.facets();
  ineqs.insert(ineqs.end(), chamber.begin(), chamber.end());
  auto in_chamber = polytope_from_inequalities(d.rank(), p.equations(), ineqs);
  if (!in_chamber || !p.in_relative_interior(in_chamber->barycenter())) return false;

  auto translates = weyl_translates(d, p);
  for (std::size_t i = 0; i < translates.size(); ++i)
    for (std::size_t j = i + 1; j < translates.size(); ++j) {
      auto common = intersect(translates[i], translates[j]);
      if (!common) continue;
      RatVector c = common->barycenter();
      if (translates[i].in_relative_interior(c) && translates[j].in_relative_interior(c)) return false;
    }
  return true;
}

}  // namespace ssv
