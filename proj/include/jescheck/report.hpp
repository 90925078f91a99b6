#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "jescheck/interval.hpp"

namespace jescheck {

// One certified claim. `eq` indexes the displayed inequality chain the
// claim replicates ("2.14", "3.16", ...); `id` is a stable slug.
struct ClaimRecord {
  std::string id;
  std::string eq;
  std::string claim;
  std::string computed_lo;
  std::string computed_hi;
  Cert verdict = Cert::indeterminate;
  int bits = 0;
  std::string note;
};

class CertificationReport {
 public:
  void add(ClaimRecord rec) { records_.push_back(std::move(rec)); }

  // Convenience: record an interval-valued claim.
  void add(std::string id, std::string eq, std::string claim, const Certified& result,
           std::string note = {});
  // Convenience: record an exact rational fact (zero-width enclosure).
  void add_exact(std::string id, std::string eq, std::string claim, const mpq_class& value,
                 bool holds, std::string note = {});

  void append(const CertificationReport& other);

  const std::vector<ClaimRecord>& records() const { return records_; }
  const ClaimRecord* find(const std::string& id) const;
  bool all_certified() const;
  std::size_t failures() const;

 private:
  std::vector<ClaimRecord> records_;
};

}  // namespace jescheck
