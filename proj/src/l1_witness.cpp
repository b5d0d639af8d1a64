#include "lpembed/l1_witness.hpp"

#include <stdexcept>

namespace lpembed {

std::string DyadicString::str() const {
  std::string s;
  s.reserve(bits.size());
  for (uint8_t b : bits) s.push_back(b ? '1' : '0');
  return s;
}

DyadicString DyadicString::from_string(const std::string& s) {
  DyadicString out;
  out.bits.reserve(s.size());
  for (char c : s) {
    if (c != '0' && c != '1') throw std::invalid_argument("dyadic string must be over {0,1}");
    out.bits.push_back(c == '1' ? 1 : 0);
  }
  return out;
}

std::vector<DyadicString> DyadicString::all_of_length(size_t len) {
  if (len > 24) throw std::invalid_argument("refusing to enumerate 2^len strings for len > 24");
  std::vector<DyadicString> out;
  out.reserve(static_cast<size_t>(1) << len);
  for (uint64_t v = 0; v < (static_cast<uint64_t>(1) << len); ++v) {
    DyadicString s;
    s.bits.resize(len);
    for (size_t i = 0; i < len; ++i)
      s.bits[i] = static_cast<uint8_t>((v >> (len - 1 - i)) & 1);  // bits[0] is the 2^-1 digit
    out.push_back(std::move(s));
  }
  return out;
}

DyadicInterval interval_of_string(const DyadicString& sigma) {
  Rational left = 0;
  for (size_t i = 0; i < sigma.length(); ++i)
    if (sigma.bits[i]) left += dyadic_unit(static_cast<unsigned>(i + 1));
  DyadicInterval iv;
  iv.left = left;
  iv.right = left + dyadic_unit(static_cast<unsigned>(sigma.length()));
  return iv;
}

int64_t psi(const DyadicString& sigma) {
  const size_t len = sigma.length();
  if (len > 62) throw std::invalid_argument("string too long for the integer injection");
  int64_t value = 0;
  for (uint8_t b : sigma.bits) value = (value << 1) | b;
  return (static_cast<int64_t>(1) << len) + value;
}

L1Member make_zero_member() {
  L1Member m;
  m.kind = L1Member::Kind::Zero;
  m.fn = StepFunction();
  m.label = "zero";
  return m;
}

L1Member make_d_member() {
  L1Member m;
  m.kind = L1Member::Kind::D;
  m.fn = StepFunction::indicator(Rational(0), Rational(1));
  m.label = "d";
  return m;
}

L1Member make_f_member(const DyadicString& sigma) {
  L1Member m;
  m.kind = L1Member::Kind::F;
  m.sigma = sigma;
  const auto iv = interval_of_string(sigma);
  StepFunction d_sigma = StepFunction::indicator(iv.left, iv.right);
  const int64_t block_at = psi(sigma);
  const Rational len(static_cast<long>(sigma.length()));
  if (sigma.length() == 0) {
    m.fn = d_sigma;  // f of the empty string is d itself; the block has height 0
  } else {
    m.fn = d_sigma + StepFunction::indicator(Rational(block_at), Rational(block_at + 1), len);
  }
  m.label = "f_" + sigma.str();
  return m;
}

Rational l1_distance(const L1Member& a, const L1Member& b) {
  return (a.fn - b.fn).l1_norm();
}

L1Space build_l1_space(int max_len, size_t member_cap) {
  if (max_len < 0) throw std::invalid_argument("max_len must be nonnegative");
  if (member_cap == 0) member_cap = kDefaultL1MemberCap;

  size_t count = 2;
  for (int len = 1; len <= max_len; ++len) count += static_cast<size_t>(1) << len;
  if (count > member_cap)
    throw std::runtime_error("cardinality cap exceeded: " + std::to_string(count) +
                             " members > cap " + std::to_string(member_cap));

  L1Space out;
  out.members.reserve(count);
  out.members.push_back(make_zero_member());
  out.members.push_back(make_d_member());
  for (int len = 1; len <= max_len; ++len)
    for (const auto& sigma : DyadicString::all_of_length(static_cast<size_t>(len)))
      out.members.push_back(make_f_member(sigma));

  const int n = static_cast<int>(out.members.size());
  std::vector<std::vector<Rational>> dist(static_cast<size_t>(n),
                                          std::vector<Rational>(static_cast<size_t>(n), Rational(0)));
  std::vector<std::string> labels;
  labels.reserve(static_cast<size_t>(n));
  for (const auto& m : out.members) labels.push_back(m.label);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Rational dij = l1_distance(out.members[static_cast<size_t>(i)], out.members[static_cast<size_t>(j)]);
      dist[static_cast<size_t>(i)][static_cast<size_t>(j)] = dij;
      dist[static_cast<size_t>(j)][static_cast<size_t>(i)] = dij;
    }
  out.space = FiniteMetricSpace::from_rational(std::move(dist), std::move(labels));
  return out;
}

LevelFamily l1_level_family() {
  LevelFamily fam;
  fam.name = "l1-witness";
  fam.first_level = 0;
  fam.level_points = [](int level) {
    std::vector<FamilyPoint> pts;
    if (level == 0) {
      pts.push_back({"zero", 0.0});
      pts.push_back({"d", 1.0});
      return pts;
    }
    const Rational norm = dyadic_unit(static_cast<unsigned>(level)) + level;
    for (const auto& sigma : DyadicString::all_of_length(static_cast<size_t>(level)))
      pts.push_back({"f_" + sigma.str(), to_double(norm)});
    return pts;
  };
  fam.min_norm_bound = [](int level) { return static_cast<double>(level); };
  return fam;
}

DecompositionReport verify_decomposition_identities(int max_len) {
  if (max_len < 1) throw std::invalid_argument("max_len must be at least 1");
  DecompositionReport report;
  report.all_ok = true;
  const StepFunction d = StepFunction::indicator(Rational(0), Rational(1));

  for (int n = 1; n <= max_len; ++n) {
    DecompositionLevelReport lvl;
    lvl.n = n;

    const auto strings = DyadicString::all_of_length(static_cast<size_t>(n));
    std::vector<StepFunction> parts;
    parts.reserve(strings.size());
    for (const auto& s : strings) {
      const auto iv = interval_of_string(s);
      parts.push_back(StepFunction::indicator(iv.left, iv.right));
    }

    // Tiling: in enumeration order the intervals must chain 0 -> 1.
    lvl.tiles_unit_interval = true;
    Rational cursor = 0;
    for (const auto& s : strings) {
      const auto iv = interval_of_string(s);
      if (iv.left != cursor) {
        lvl.tiles_unit_interval = false;
        break;
      }
      cursor = iv.right;
    }
    if (cursor != 1) lvl.tiles_unit_interval = false;

    std::vector<std::pair<const StepFunction*, Rational>> terms;
    terms.reserve(parts.size());
    for (const auto& p : parts) terms.emplace_back(&p, Rational(1));
    lvl.sums_to_d = (StepFunction::combine(terms) == d);

    lvl.norms_match = true;
    const Rational expected = dyadic_unit(static_cast<unsigned>(n));
    for (const auto& p : parts)
      if (p.l1_norm() != expected) {
        lvl.norms_match = false;
        break;
      }

    report.all_ok = report.all_ok && lvl.tiles_unit_interval && lvl.sums_to_d && lvl.norms_match;
    report.levels.push_back(lvl);
  }
  return report;
}

}  // namespace lpembed
