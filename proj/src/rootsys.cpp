#include "reslab/rootsys.hpp"

#include <algorithm>
#include <cctype>

namespace reslab::rootsys {

namespace {

RationalVector unit(std::size_t dim, std::size_t i) {
  RationalVector v(dim);
  v[i] = Rational(1);
  return v;
}

void push_pm_pairs(std::vector<RationalVector>& roots, std::size_t dim,
                   std::size_t lo, std::size_t hi) {
  // all +/- e_i +/- e_j with lo <= i < j < hi
  for (std::size_t i = lo; i < hi; ++i)
    for (std::size_t j = i + 1; j < hi; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1}) {
          RationalVector v(dim);
          v[i] = Rational(si);
          v[j] = Rational(sj);
          roots.push_back(v);
        }
}

// +/- (c0*e_{fixed0} + c1*e_{fixed1} + ...) + half-integer tail over `free`
// with a parity constraint on the number of minus signs in the tail.
void push_spin_roots(std::vector<RationalVector>& roots, std::size_t dim,
                     const std::vector<std::pair<std::size_t, int>>& fixed,
                     const std::vector<std::size_t>& free_idx, int parity,
                     bool both_signs) {
  const Rational half(1, 2);
  const std::size_t m = free_idx.size();
  for (std::size_t mask = 0; mask < (std::size_t(1) << m); ++mask) {
    int minus = __builtin_popcountll(mask);
    if (minus % 2 != parity) continue;
    RationalVector v(dim);
    for (auto [idx, c] : fixed) v[idx] = Rational(c) * half;
    for (std::size_t k = 0; k < m; ++k)
      v[free_idx[k]] = (mask >> k) & 1 ? -half : half;
    roots.push_back(v);
    if (both_signs) roots.push_back(-v);
  }
}

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::BC: return "BC";
    case Family::E: return "E";
    case Family::F: return "F";
    case Family::G: return "G";
  }
  return "?";
}

void RootSystemType::validate() const {
  const bool ok = [&] {
    switch (family) {
      case Family::A:
      case Family::B:
      case Family::C:
      case Family::BC: return rank >= 1;
      case Family::D: return rank >= 2;
      case Family::E: return rank >= 6 && rank <= 8;
      case Family::F: return rank == 4;
      case Family::G: return rank == 2;
    }
    return false;
  }();
  if (!ok)
    throw InvalidTypeError("invalid root system type " + family_name(family) +
                           std::to_string(rank));
}

std::string RootSystemType::label() const {
  return family_name(family) + std::to_string(rank);
}

std::size_t RootSystemType::expected_root_count() const {
  const std::size_t l = static_cast<std::size_t>(rank);
  switch (family) {
    case Family::A: return l * l + l;
    case Family::B:
    case Family::C: return 2 * l * l;
    case Family::BC: return 2 * l * l + 2 * l;
    case Family::D: return 2 * l * l - 2 * l;
    case Family::E: return rank == 6 ? 72 : rank == 7 ? 126 : 240;
    case Family::F: return 48;
    case Family::G: return 12;
  }
  return 0;
}

RootSystemType parse_type(const std::string& s) {
  std::size_t i = 0;
  while (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) ++i;
  std::string fam = s.substr(0, i);
  std::string num = s.substr(i);
  for (auto& ch : fam) ch = std::toupper(static_cast<unsigned char>(ch));
  Family f;
  if (fam == "A") f = Family::A;
  else if (fam == "B") f = Family::B;
  else if (fam == "C") f = Family::C;
  else if (fam == "D") f = Family::D;
  else if (fam == "BC") f = Family::BC;
  else if (fam == "E") f = Family::E;
  else if (fam == "F") f = Family::F;
  else if (fam == "G") f = Family::G;
  else throw InvalidTypeError("unknown root system family in '" + s + "'");
  int rank = 0;
  if (!num.empty()) {
    for (char c : num)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw InvalidTypeError("bad rank in '" + s + "'");
    if (num.size() > 4) throw InvalidTypeError("rank too large in '" + s + "'");
    rank = std::stoi(num);
  } else if (f == Family::F) {
    rank = 4;
  } else if (f == Family::G) {
    rank = 2;
  } else {
    throw InvalidTypeError("type '" + s + "' needs an explicit rank");
  }
  RootSystemType t{f, rank};
  t.validate();
  return t;
}

bool RootSystem::is_positive(std::size_t root_idx) const {
  for (const auto& c : simple_coords[root_idx])
    if (c.sign() < 0) return false;
  return true;
}

RootSystem build(RootSystemType t) {
  t.validate();
  const std::size_t l = static_cast<std::size_t>(t.rank);
  RootSystem rs;
  rs.type = t;
  std::vector<RationalVector>& roots = rs.roots;
  std::vector<RationalVector>& simple = rs.simple;

  switch (t.family) {
    case Family::A: {
      rs.ambient_dim = l + 1;
      for (std::size_t i = 0; i <= l; ++i)
        for (std::size_t j = 0; j <= l; ++j)
          if (i != j) roots.push_back(unit(l + 1, i) - unit(l + 1, j));
      for (std::size_t i = 0; i < l; ++i)
        simple.push_back(unit(l + 1, i) - unit(l + 1, i + 1));
      break;
    }
    case Family::B:
    case Family::C:
    case Family::BC: {
      rs.ambient_dim = l;
      push_pm_pairs(roots, l, 0, l);
      for (std::size_t i = 0; i < l; ++i) {
        if (t.family != Family::C) {
          roots.push_back(unit(l, i));
          roots.push_back(-unit(l, i));
        }
        if (t.family != Family::B) {
          roots.push_back(unit(l, i).scaled(Rational(2)));
          roots.push_back(unit(l, i).scaled(Rational(-2)));
        }
      }
      for (std::size_t i = 0; i + 1 < l; ++i)
        simple.push_back(unit(l, i) - unit(l, i + 1));
      simple.push_back(t.family == Family::C ? unit(l, l - 1).scaled(Rational(2))
                                             : unit(l, l - 1));
      break;
    }
    case Family::D: {
      rs.ambient_dim = l;
      push_pm_pairs(roots, l, 0, l);
      for (std::size_t i = 0; i + 1 < l; ++i)
        simple.push_back(unit(l, i) - unit(l, i + 1));
      simple.push_back(unit(l, l - 2) + unit(l, l - 1));
      break;
    }
    case Family::G: {
      rs.ambient_dim = 3;
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
          if (i != j) roots.push_back(unit(3, i) - unit(3, j));
      for (std::size_t i = 0; i < 3; ++i) {
        std::size_t j = (i + 1) % 3, k = (i + 2) % 3;
        RationalVector v(3);
        v[i] = Rational(2);
        v[j] = Rational(-1);
        v[k] = Rational(-1);
        roots.push_back(v);
        roots.push_back(-v);
      }
      simple.push_back(unit(3, 0) - unit(3, 1));
      {
        RationalVector a2(3);
        a2[0] = Rational(-2);
        a2[1] = Rational(1);
        a2[2] = Rational(1);
        simple.push_back(a2);
      }
      break;
    }
    case Family::F: {
      rs.ambient_dim = 4;
      for (std::size_t i = 0; i < 4; ++i) {
        roots.push_back(unit(4, i));
        roots.push_back(-unit(4, i));
      }
      push_pm_pairs(roots, 4, 0, 4);
      // half-integer roots: all 16 sign patterns
      push_spin_roots(roots, 4, {{0, 1}}, {1, 2, 3}, 0, true);
      push_spin_roots(roots, 4, {{0, 1}}, {1, 2, 3}, 1, true);
      simple.push_back(unit(4, 1) - unit(4, 2));
      simple.push_back(unit(4, 2) - unit(4, 3));
      simple.push_back(unit(4, 3));
      {
        RationalVector a4(4);
        const Rational half(1, 2);
        a4[0] = half;
        a4[1] = -half;
        a4[2] = -half;
        a4[3] = -half;
        simple.push_back(a4);
      }
      break;
    }
    case Family::E: {
      rs.ambient_dim = 8;
      const Rational half(1, 2);
      if (t.rank == 8) {
        push_pm_pairs(roots, 8, 0, 8);
        // 1/2 * sum (-1)^{n_i} e_i with an even number of minus signs
        push_spin_roots(roots, 8, {}, {0, 1, 2, 3, 4, 5, 6, 7}, 0, false);
        // alpha_1 = e7 - e6, ..., alpha_6 = e2 - e1, alpha_7 = e2 + e1,
        // alpha_8 = (e8 - e7 - ... - e2 + e1)/2
        for (std::size_t k = 0; k < 6; ++k)
          simple.push_back(unit(8, 6 - k) - unit(8, 5 - k));
        simple.push_back(unit(8, 1) + unit(8, 0));
        {
          RationalVector a8(8);
          a8[7] = half;
          for (std::size_t i = 1; i <= 6; ++i) a8[i] = -half;
          a8[0] = half;
          simple.push_back(a8);
        }
      } else if (t.rank == 7) {
        // realized inside R^8 as the orthogonal complement of e8 + e7
        roots.push_back(unit(8, 7) - unit(8, 6));
        roots.push_back(unit(8, 6) - unit(8, 7));
        push_pm_pairs(roots, 8, 0, 6);
        // +/- (e8 - e7 + sum (-1)^{n_i} e_i)/2, odd number of minus signs
        push_spin_roots(roots, 8, {{7, 1}, {6, -1}}, {0, 1, 2, 3, 4, 5}, 1, true);
        for (std::size_t k = 0; k < 5; ++k)
          simple.push_back(unit(8, 5 - k) - unit(8, 4 - k));
        simple.push_back(unit(8, 1) + unit(8, 0));
        {
          RationalVector a7(8);
          a7[7] = half;
          a7[6] = -half;
          for (std::size_t i = 1; i <= 5; ++i) a7[i] = -half;
          a7[0] = half;
          simple.push_back(a7);
        }
      } else {
        // E6, Bourbaki coordinates in R^8
        push_pm_pairs(roots, 8, 0, 5);
        // +/- (e8 - e7 - e6 + sum (-1)^{n_i} e_i)/2, even number of minus signs
        push_spin_roots(roots, 8, {{7, 1}, {6, -1}, {5, -1}}, {0, 1, 2, 3, 4}, 0,
                        true);
        {
          RationalVector a1(8);
          a1[0] = half;
          a1[7] = half;
          for (std::size_t i = 1; i <= 6; ++i) a1[i] = -half;
          simple.push_back(a1);
        }
        simple.push_back(unit(8, 0) + unit(8, 1));
        simple.push_back(unit(8, 1) - unit(8, 0));
        simple.push_back(unit(8, 2) - unit(8, 1));
        simple.push_back(unit(8, 3) - unit(8, 2));
        simple.push_back(unit(8, 4) - unit(8, 3));
      }
      break;
    }
  }

  std::sort(roots.begin(), roots.end());
  if (roots.size() != t.expected_root_count())
    throw std::logic_error("root count mismatch for " + t.label());

  rs.simple_coords.reserve(roots.size());
  for (const auto& root : roots) {
    auto coords = exactlin::solve_in_span(simple, root);
    if (!coords)
      throw std::logic_error("root outside simple span in " + t.label());
    bool nonneg = true, nonpos = true;
    for (const auto& c : *coords) {
      if (!c.is_integer())
        throw std::logic_error("non-integral simple expansion in " + t.label());
      if (c.sign() > 0) nonpos = false;
      if (c.sign() < 0) nonneg = false;
    }
    if (!nonneg && !nonpos)
      throw std::logic_error("mixed-sign simple expansion in " + t.label());
    rs.simple_coords.push_back(std::move(*coords));
  }
  return rs;
}

std::vector<RationalVector> positive_roots(const RootSystem& rs) {
  std::vector<RationalVector> out;
  out.reserve(rs.roots.size() / 2);
  for (std::size_t i = 0; i < rs.roots.size(); ++i)
    if (rs.is_positive(i)) out.push_back(rs.roots[i]);
  return out;
}

ParabolicComplement parabolic_complement(const RootSystem& rs, int j0) {
  if (j0 < 1 || j0 > rs.type.rank)
    throw IndexOutOfRangeError("j0 = " + std::to_string(j0) + " out of range for " +
                               rs.type.label());
  ParabolicComplement pc;
  pc.j0 = j0;
  for (std::size_t i = 0; i < rs.roots.size(); ++i)
    if (!rs.is_positive(i) && !rs.simple_coords[i][j0 - 1].is_zero())
      pc.complement.push_back(rs.roots[i]);
  return pc;
}

std::size_t minimal_resonant_codim(RootSystemType t) {
  t.validate();
  RootSystem rs = build(t.reduced());
  std::size_t best = rs.roots.size();
  for (int j0 = 1; j0 <= rs.type.rank; ++j0)
    best = std::min(best, parabolic_complement(rs, j0).codim());
  return best;
}

std::vector<int> minimizing_j0(RootSystemType t) {
  t.validate();
  RootSystem rs = build(t.reduced());
  std::vector<std::size_t> codims;
  std::size_t best = rs.roots.size();
  for (int j0 = 1; j0 <= rs.type.rank; ++j0) {
    codims.push_back(parabolic_complement(rs, j0).codim());
    best = std::min(best, codims.back());
  }
  std::vector<int> out;
  for (int j0 = 1; j0 <= rs.type.rank; ++j0)
    if (codims[j0 - 1] == best) out.push_back(j0);
  return out;
}

}  // namespace reslab::rootsys
