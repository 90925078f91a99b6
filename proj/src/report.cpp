#include "jescheck/report.hpp"

#include "jescheck/rational.hpp"

namespace jescheck {

void CertificationReport::add(std::string id, std::string eq, std::string claim,
                              const Certified& result, std::string note) {
  ClaimRecord rec;
  rec.id = std::move(id);
  rec.eq = std::move(eq);
  rec.claim = std::move(claim);
  rec.computed_lo = result.value.str_lo();
  rec.computed_hi = result.value.str_hi();
  rec.verdict = result.verdict;
  rec.bits = result.bits;
  rec.note = std::move(note);
  records_.push_back(std::move(rec));
}

void CertificationReport::add_exact(std::string id, std::string eq, std::string claim,
                                    const mpq_class& value, bool holds, std::string note) {
  ClaimRecord rec;
  rec.id = std::move(id);
  rec.eq = std::move(eq);
  rec.claim = std::move(claim);
  rec.computed_lo = rational_to_string(value);
  rec.computed_hi = rec.computed_lo;
  rec.verdict = holds ? Cert::certified_true : Cert::certified_false;
  rec.bits = 0;
  rec.note = std::move(note);
  records_.push_back(std::move(rec));
}

void CertificationReport::append(const CertificationReport& other) {
  records_.insert(records_.end(), other.records_.begin(), other.records_.end());
}

const ClaimRecord* CertificationReport::find(const std::string& id) const {
  for (const auto& rec : records_)
    if (rec.id == id) return &rec;
  return nullptr;
}

bool CertificationReport::all_certified() const {
  for (const auto& rec : records_)
    if (rec.verdict != Cert::certified_true) return false;
  return !records_.empty();
}

std::size_t CertificationReport::failures() const {
  std::size_t n = 0;
  for (const auto& rec : records_)
    if (rec.verdict != Cert::certified_true) ++n;
  return n;
}

}  // namespace jescheck
