#include "faberkit/faber.hpp"

#include <map>
#include <mutex>
#include <utility>

namespace faberkit {

unsigned Partition::parts() const {
  unsigned s = 0;
  for (unsigned d : multiplicity) s += d;
  return s;
}

unsigned Partition::total() const {
  unsigned s = 0;
  for (std::size_t i = 0; i < multiplicity.size(); ++i) s += static_cast<unsigned>(i + 1) * multiplicity[i];
  return s;
}

Integer Partition::multinomial() const {
  Integer num, den = 1, f;
  mpz_fac_ui(num.get_mpz_t(), parts());
  for (unsigned d : multiplicity) {
    mpz_fac_ui(f.get_mpz_t(), d);
    den *= f;
  }
  return num / den;
}

namespace {

// Fills `current` with multiplicities for parts of size <= max_part.
void enumerate(unsigned remaining_sum, unsigned remaining_parts, unsigned max_part, Partition& current,
               std::vector<Partition>& out) {
  if (remaining_parts == 0) {
    if (remaining_sum == 0) out.push_back(current);
    return;
  }
  if (max_part == 0) return;
  // Parts are at least 1, so remaining_parts <= remaining_sum is required,
  // and at most max_part each.
  if (remaining_parts > remaining_sum || remaining_sum > remaining_parts * max_part) return;
  for (unsigned d = 0; d <= remaining_parts && d * max_part <= remaining_sum; ++d) {
    current.multiplicity[max_part - 1] = d;
    enumerate(remaining_sum - d * max_part, remaining_parts - d, max_part - 1, current, out);
  }
  current.multiplicity[max_part - 1] = 0;
}

struct PartitionCache {
  std::mutex mutex;
  std::map<std::pair<unsigned, unsigned>, std::shared_ptr<const std::vector<Partition>>> table;
};

PartitionCache& cache() {
  static PartitionCache c;
  return c;
}

}  // namespace

const std::vector<Partition>& partitions(unsigned n, unsigned m) {
  auto& c = cache();
  const auto key = std::make_pair(n, m);
  {
    std::lock_guard<std::mutex> lock(c.mutex);
    if (auto it = c.table.find(key); it != c.table.end()) return *it->second;
  }
  auto result = std::make_shared<std::vector<Partition>>();
  Partition current{std::vector<unsigned>(n, 0)};
  if (n > 0) enumerate(n, m, n, current, *result);
  std::lock_guard<std::mutex> lock(c.mutex);
  // A concurrent caller may have inserted first; keep whichever landed.
  auto [it, inserted] = c.table.emplace(key, std::move(result));
  return *it->second;
}

Rational binomial(long p, unsigned m) {
  Rational num(1);
  Integer den = 1;
  for (unsigned k = 0; k < m; ++k) {
    num *= Rational(p - static_cast<long>(k));
    den *= k + 1;
  }
  return num / Rational(den);
}

}  // namespace faberkit
