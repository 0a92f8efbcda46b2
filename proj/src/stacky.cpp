#include "halfgenus/stacky.hpp"

#include <cctype>

namespace halfgenus {

RamificationDatum::RamificationDatum(long long group_order,
                                     std::vector<long long> filtration)
    : order_(group_order), filtration_(std::move(filtration)) {
  if (order_ < 1) throw DomainError("stabilizer order must be positive");
  while (!filtration_.empty() && filtration_.back() == 1) filtration_.pop_back();
  if (filtration_.empty() && order_ > 1)
    throw DomainError("filtration must start with |G_0| = |G|");
  if (!filtration_.empty() && filtration_.front() != order_)
    throw DomainError("filtration must start with |G_0| = |G|");
  long long prev = order_;
  for (long long g : filtration_) {
    if (g < 1 || g > prev) throw DomainError("filtration must be nonincreasing");
    if (order_ % g != 0) throw DomainError("each |G_i| must divide |G|");
    prev = g;
  }
}

RamificationDatum RamificationDatum::tame(long long group_order) {
  if (group_order == 1) return RamificationDatum(1, {});
  return RamificationDatum(group_order, {group_order});
}

std::string RamificationDatum::str() const {
  std::string out = "(" + std::to_string(order_);
  for (size_t i = 1; i < filtration_.size(); ++i)
    out += (i == 1 ? ":" : ",") + std::to_string(filtration_[i]);
  return out + ")";
}

Rational delta_p(const RamificationDatum& d) {
  Rational sum(0);
  for (long long g : d.filtration()) sum = sum + Rational(g - 1, d.group_order());
  return sum;
}

Rational chi(const StackySignature& sig) {
  Rational out(2 - 2 * sig.coarse_genus - sig.punctures);
  for (const auto& pt : sig.points) out = out - delta_p(pt);
  return out;
}

Rational genus(const StackySignature& sig) {
  return (Rational(2) - chi(sig)) / Rational(2);
}

GenusLemmaReport check_genus_lt_half_lemma(const StackySignature& sig) {
  GenusLemmaReport report;
  report.genus_value = genus(sig);
  report.applies = report.genus_value < Rational(1, 2);
  report.coarse_genus_zero = sig.coarse_genus == 0;
  report.no_punctures = sig.punctures == 0;
  long long nontrivial = 0;
  bool tame = true;
  for (const auto& pt : sig.points) {
    if (pt.group_order() > 1) ++nontrivial;
    if (!pt.is_tame()) tame = false;
  }
  report.at_most_one_point = nontrivial <= 1;
  report.all_tame = tame;
  report.satisfied = !report.applies ||
                     (report.coarse_genus_zero && report.no_punctures &&
                      report.at_most_one_point && report.all_tame);
  return report;
}

namespace {

struct Cursor {
  const std::string& s;
  size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c))
      throw ParseError("expected '" + std::string(1, c) + "' at offset " +
                       std::to_string(i) + " in signature");
  }
  long long number() {
    skip_ws();
    size_t start = i;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
      throw ParseError("expected an integer at offset " + std::to_string(start));
    return std::stoll(s.substr(start, i - start));
  }
  bool done() {
    skip_ws();
    return i == s.size();
  }
};

}  // namespace

StackySignature parse_signature(const std::string& text) {
  Cursor cur{text};
  StackySignature sig;
  sig.coarse_genus = cur.number();
  if (sig.coarse_genus < 0) throw ParseError("coarse genus must be nonnegative");
  cur.expect(';');
  sig.punctures = cur.number();
  if (sig.punctures < 0) throw ParseError("puncture count must be nonnegative");
  cur.expect(';');
  cur.expect('[');
  if (!cur.eat(']')) {
    do {
      cur.expect('(');
      long long order = cur.number();
      std::vector<long long> filtration{order};
      if (cur.eat(':')) {
        do {
          filtration.push_back(cur.number());
        } while (cur.eat(','));
      }
      cur.expect(')');
      sig.points.emplace_back(order, std::move(filtration));
    } while (cur.eat(','));
    cur.expect(']');
  }
  if (!cur.done()) throw ParseError("trailing characters after signature");
  return sig;
}

std::string format_signature(const StackySignature& sig) {
  std::string out = std::to_string(sig.coarse_genus) + ";" +
                    std::to_string(sig.punctures) + ";[";
  for (size_t i = 0; i < sig.points.size(); ++i) {
    if (i) out += ",";
    out += sig.points[i].str();
  }
  return out + "]";
}

}  // namespace halfgenus
