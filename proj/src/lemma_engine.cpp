/*
   Copyright 2026 The dalg Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "dalg/lemma_engine.hpp"

#include <sstream>
#include <stdexcept>

namespace dalg {

void LemmaConfig::validate() const {
  if (m < 2) throw std::invalid_argument("lemma engine requires m >= 2, got " + std::to_string(m));
  if (alpha < 1) throw std::invalid_argument("alpha must be >= 1, got " + std::to_string(alpha));
  if (j0 < 1) throw std::invalid_argument("j0 must be >= 1, got " + std::to_string(j0));
}

ExtendedRing::ExtendedRing(const LemmaConfig& cfg) : m_(cfg.m), l_(cfg.l()) {
  cfg.validate();
  symbols_.push_back({"x", "chain variable"});
  symbols_.push_back({"y", "chain index variable"});
  symbols_.push_back({"a", "target coefficient of x"});
  symbols_.push_back({"b", "target constant"});
  for (int s = 1; s <= m_ - 1; ++s)
    symbols_.push_back({"lambda" + std::to_string(s), "constant value of f_" + std::to_string(l_ - s)});
  for (int i = l_ - m_; i >= 0; --i)
    symbols_.push_back({"c" + std::to_string(i), "integration constant of f_" + std::to_string(i)});
}

std::vector<std::string> ExtendedRing::names() const {
  std::vector<std::string> out;
  out.reserve(symbols_.size());
  for (const auto& s : symbols_) out.push_back(s.name);
  return out;
}

std::size_t ExtendedRing::lambda(int s) const {
  if (s < 1 || s > m_ - 1) throw std::out_of_range("lambda index out of range");
  return 3 + static_cast<std::size_t>(s);
}

std::size_t ExtendedRing::integration_constant(int i) const {
  if (i < 0 || i > l_ - m_) throw std::out_of_range("integration constant index out of range");
  return 3 + static_cast<std::size_t>(m_) + static_cast<std::size_t>(l_ - m_ - i);
}

Polynomial CoefficientSequence::f(int i) const {
  if (i < 0 || i >= static_cast<int>(entries.size())) return Polynomial(ring.arity());
  return entries[static_cast<std::size_t>(i)];
}

namespace {

Polynomial x_power(const ExtendedRing& ring, long k) {
  return Polynomial::term(Monomial::variable(ring.arity(), ExtendedRing::x, static_cast<std::uint32_t>(k)),
                          Rational(1));
}

}  // namespace

CoefficientSequence reconstruct_sequence(const LemmaConfig& cfg) {
  cfg.validate();
  CoefficientSequence seq{cfg, ExtendedRing(cfg), {}};
  const int l = cfg.l();
  const ExtendedRing& ring = seq.ring;
  seq.entries.assign(static_cast<std::size_t>(l + 1), Polynomial(ring.arity()));
  seq.entries[static_cast<std::size_t>(l)] = ring.constant(Rational(1));
  for (int s = 1; s <= cfg.m - 1; ++s) seq.entries[static_cast<std::size_t>(l - s)] = ring.var(ring.lambda(s));

  const Polynomial xa = x_power(ring, cfg.alpha);
  for (int i = l; i >= cfg.m; --i) {
    Polynomial derivative = Rational(i) * xa * seq.f(i) - Rational(i + 1) * seq.f(i + 1);
    Polynomial next = antiderivative(derivative, ExtendedRing::x);
    next += ring.var(ring.integration_constant(i - cfg.m));
    seq.entries[static_cast<std::size_t>(i - cfg.m)] = std::move(next);
  }
  return seq;
}

std::vector<DegreeExpectation> degree_schedule(const LemmaConfig& cfg) {
  cfg.validate();
  std::vector<DegreeExpectation> out;
  const int l = cfg.l();
  for (int j = 1; j <= cfg.j0; ++j) {
    out.push_back({l - cfg.m * j, j, 0, static_cast<long>(j) * (cfg.alpha + 1), true});
    for (int s = 1; s <= cfg.m - 1; ++s)
      out.push_back({l - cfg.m * j + s, j, s, static_cast<long>(j - 1) * (cfg.alpha + 1), false});
  }
  return out;
}

ScheduleReport check_degree_schedule(const CoefficientSequence& seq, const LemmaConfig& cfg) {
  ScheduleReport report;
  for (const auto& e : degree_schedule(cfg)) {
    ++report.checked;
    const Polynomial f = seq.f(e.index);
    const Degree actual = degree_in(f, ExtendedRing::x);
    if (e.exact) {
      if (actual != Degree(e.degree)) {
        report.violations.push_back({e, actual, "degree differs"});
        continue;
      }
      Polynomial lead = coefficient_of_power(f, ExtendedRing::x, static_cast<std::uint32_t>(e.degree));
      if (!lead.is_constant()) {
        report.violations.push_back({e, actual, "leading coefficient involves free constants"});
      } else if (lead.constant_term() <= 0) {
        report.violations.push_back({e, actual, "leading coefficient is not positive"});
      }
    } else if (actual > Degree(e.degree)) {
      report.violations.push_back({e, actual, "degree exceeds bound"});
    }
  }
  return report;
}

std::vector<Polynomial> closed_forms_low(const LemmaConfig& cfg, const ExtendedRing& ring) {
  cfg.validate();
  const Polynomial xa = x_power(ring, cfg.alpha);
  std::vector<Polynomial> out;
  out.push_back(ring.var(ExtendedRing::a) * ring.var(ExtendedRing::x) + ring.var(ExtendedRing::b));
  for (int i = 1; i < cfg.m; ++i) out.push_back(make_rational(i, i + 1) * xa * out.back());
  return out;
}

LeadingData leading_ledger(const LemmaConfig& cfg) {
  cfg.validate();
  const ExtendedRing ring(cfg);
  const int l = cfg.l(), m = cfg.m, al = cfg.alpha;
  LeadingData data;
  data.A[1] = make_rational(l, al + 1);
  if (cfg.j0 >= 2) {
    data.B[1] = Rational(-l);
    data.A_companion.emplace(1, make_rational(l - 1, al + 1) * ring.var(ring.lambda(1)));
  }
  for (int j = 2; j <= cfg.j0; ++j) {
    const int top = l - (j - 1) * m;  // index of f_{l-(j-1)m}
    data.A[j] = Rational(top) * data.A.at(j - 1) / Rational(j * (al + 1));
    if (j <= cfg.j0 - 1) {
      data.B[j] = (Rational(top - 1) * data.B.at(j - 1) - Rational(top) * data.A.at(j - 1)) /
                  Rational((j - 1) * (al + 1) + 1);
      data.A_companion.emplace(j, make_rational(top - 1, j * (al + 1)) * data.A_companion.at(j - 1));
    }
  }
  return data;
}

Polynomial residual(int m, int alpha, std::span<const Polynomial> f, const Polynomial& a, const Polynomial& b,
                    std::size_t x_var, std::size_t y_var) {
  const std::size_t arity = a.arity();
  auto at = [&](int i) {
    return (i < 0 || i >= static_cast<int>(f.size())) ? Polynomial(arity) : f[static_cast<std::size_t>(i)];
  };
  const Polynomial xa = Polynomial::term(Monomial::variable(arity, x_var, static_cast<std::uint32_t>(alpha)),
                                         Rational(1));
  const int top = static_cast<int>(f.size()) - 1;
  Polynomial out(arity);
  for (int i = 0; i <= top + m; ++i) {
    Polynomial coeff = partial_derivative(at(i - m), x_var) + Rational(i + 1) * at(i + 1) -
                       Rational(i) * xa * at(i);
    if (coeff.is_zero()) continue;
    out += coeff * Polynomial::term(Monomial::variable(arity, y_var, static_cast<std::uint32_t>(i)), Rational(1));
  }
  out -= a * Polynomial::variable(arity, x_var) + b;
  return out;
}

Polynomial residual(const CoefficientSequence& seq, const Polynomial& a, const Polynomial& b) {
  return residual(seq.cfg.m, seq.cfg.alpha, seq.entries, a, b, ExtendedRing::x, ExtendedRing::y);
}

std::string to_string(Resolution r) {
  switch (r) {
    case Resolution::SignClash: return "sign-clash";
    case Resolution::NoAdmissibleJ0: return "no-admissible-j0";
    case Resolution::DegreeAbsurdity: return "degree-absurdity";
    case Resolution::Unresolved: return "unresolved";
  }
  return "unresolved";
}

bool Certificate::complete() const {
  if (cases.empty() || j0_one_exclusion.empty()) return false;
  for (const auto& c : cases)
    if (c.resolution == Resolution::Unresolved) return false;
  return true;
}

namespace {

// Integer j0 >= 2 among the candidates with (j0-1)(alpha+1) == rhs.
std::optional<int> admissible_j0(int alpha, long rhs, int j0_max) {
  for (int j0 = 2; j0 <= j0_max; ++j0)
    if (static_cast<long>(j0 - 1) * (alpha + 1) == rhs) return j0;
  return std::nullopt;
}

// Fills the ledger-driven part of a case with an admissible j0. `factor_A`
// and `factor_B` convert the ledger entries into the forced value of the
// target coefficient (a in case 1, b in case 2).
void resolve_by_ledger(CaseEntry& entry, int m, int alpha, int j0) {
  const LemmaConfig cfg{m, alpha, j0};
  const LeadingData ledger = leading_ledger(cfg);
  const int j = j0 - 1;
  entry.A = ledger.A.at(j);
  entry.B = ledger.B.at(j);
  entry.forced_by_A = Rational(m) * *entry.A;
  entry.forced_by_B = Rational(m - 1) * *entry.B;

  // Same coefficients, read off the symbolic chain: f_m and f_{m-1}.
  const CoefficientSequence seq = reconstruct_sequence(cfg);
  const long top = static_cast<long>(j) * (alpha + 1);
  const long sub = static_cast<long>(j - 1) * (alpha + 1) + 1;
  Polynomial lead_m = coefficient_of_power(seq.f(m), ExtendedRing::x, static_cast<std::uint32_t>(top));
  Polynomial sub_m1 = coefficient_of_power(seq.f(m - 1), ExtendedRing::x, static_cast<std::uint32_t>(sub));
  entry.symbolic_crosscheck = degree_in(seq.f(m), ExtendedRing::x) == Degree(top) && lead_m.is_constant() &&
                              lead_m.constant_term() == *entry.A && sub_m1.is_constant() &&
                              sub_m1.constant_term() == *entry.B;

  const bool clash = *entry.forced_by_A > 0 && *entry.forced_by_B < 0 && *entry.symbolic_crosscheck;
  entry.resolution = clash ? Resolution::SignClash : Resolution::Unresolved;
  const char* target = entry.case_number == 1 ? "a" : "b";
  std::ostringstream os;
  os << "j0 = " << j0 << " (l = " << m * j0 << "): comparing f_" << m << " gives " << target << " = m*A = "
     << to_string(*entry.forced_by_A) << " > 0, comparing f_" << (m - 1) << " gives " << target
     << " = (m-1)*B = " << to_string(*entry.forced_by_B) << " < 0";
  entry.description = clash ? os.str() : os.str() + " (signs do not clash)";
}

}  // namespace

Certificate contradiction_certificate(int m, int alpha) {
  LemmaConfig{m, alpha, 1}.validate();
  Certificate cert;
  cert.m = m;
  cert.alpha = alpha;
  cert.j0_max = (m - 1) * alpha + 1;

  {
    std::ostringstream os;
    os << "j0 = 1 excluded: then deg_x f_" << m << " = 0, but the closed form f_" << m
       << " = (a*x^" << (m - 1) * alpha + 1 << " + b*x^" << (m - 1) * alpha << ")/" << m
       << " is zero or has x-degree >= " << (m - 1) * alpha << " > 0";
    cert.j0_one_exclusion = os.str();
  }

  const long ma1 = static_cast<long>(m - 1) * alpha;
  const long ma2 = static_cast<long>(m - 2) * alpha;

  // Case 1: a != 0.
  {
    CaseEntry c;
    c.case_number = 1;
    c.hypothesis = "a != 0";
    c.degree_equation = "(j0-1)(alpha+1) = (m-1)alpha+1 = " + std::to_string(ma1 + 1);
    c.j0 = admissible_j0(alpha, ma1 + 1, cert.j0_max);
    if (!c.j0) {
      c.resolution = Resolution::NoAdmissibleJ0;
      c.description = "no integer j0 in [2, " + std::to_string(cert.j0_max) + "] satisfies the degree equation";
    } else {
      c.companion_exclusion = "A_companion != 0 would need (j0-1)(alpha+1) = (m-2)alpha+1 = " +
                              std::to_string(ma2 + 1) + " != " + std::to_string(ma1 + 1) +
                              ", so the x^{(j0-1)(alpha+1)} term of f_{m-1} vanishes";
      resolve_by_ledger(c, m, alpha, *c.j0);
    }
    cert.cases.push_back(std::move(c));
  }

  // Case 2: a = 0, b != 0.
  {
    CaseEntry c;
    c.case_number = 2;
    c.hypothesis = "a = 0, b != 0";
    c.degree_equation = "(j0-1)(alpha+1) = (m-1)alpha = " + std::to_string(ma1);
    c.j0 = admissible_j0(alpha, ma1, cert.j0_max);
    if (!c.j0) {
      c.resolution = Resolution::NoAdmissibleJ0;
      c.description = "no integer j0 in [2, " + std::to_string(cert.j0_max) + "] satisfies the degree equation";
    } else {
      c.companion_exclusion = "A_companion != 0 would need (j0-1)(alpha+1) = (m-2)alpha = " + std::to_string(ma2) +
                              " != " + std::to_string(ma1) + "; with A_companion = 0, (j0-2)(alpha+1)+1 = " +
                              std::to_string(ma2) + " matches the b-term of f_{m-1}";
      resolve_by_ledger(c, m, alpha, *c.j0);
    }
    cert.cases.push_back(std::move(c));
  }

  // Case 3: a = b = 0.
  {
    CaseEntry c;
    c.case_number = 3;
    c.hypothesis = "a = b = 0";
    c.degree_equation = "f_m = 0 versus deg_x f_m = (j0-1)(alpha+1)";
    c.resolution = Resolution::DegreeAbsurdity;
    c.description = "the closed form gives f_" + std::to_string(m) +
                    " = 0, while deg_x f_m = (j0-1)(alpha+1) > 0 for every j0 >= 2";
    cert.cases.push_back(std::move(c));
  }
  return cert;
}

}  // namespace dalg
