#include "kg/multiindex.hpp"

namespace kg {

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

mpz_class multinomial(const MultiIndex& m) {
  mpz_class out = 1;
  mpz_class fact;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(m.degree()));
  for (int part : m.parts) {
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(part));
    out /= fact;
  }
  return out;
}

std::optional<MultiIndex> shifted(const MultiIndex& m, std::size_t i,
                                  std::size_t j) {
  if (m.parts[i] == 0) return std::nullopt;
  MultiIndex n = m;
  n.parts[i] -= 1;
  n.parts[j] += 1;
  return n;
}

namespace {

void emit(std::vector<int>& prefix, int pos, int remaining, int d,
          std::vector<MultiIndex>& out) {
  if (pos == d) {
    prefix[pos] = remaining;
    out.emplace_back(prefix);
    return;
  }
  for (int m = remaining; m >= 0; --m) {
    prefix[pos] = m;
    emit(prefix, pos + 1, remaining - m, d, out);
  }
}

}  // namespace

IndexTable::IndexTable(int d, int N, std::size_t guard) : d_(d), N_(N) {
  if (d < 0 || N < 0)
    throw std::invalid_argument("IndexTable requires d >= 0, N >= 0");
  mpz_class nu = binomial(static_cast<unsigned long>(N + d),
                          static_cast<unsigned long>(d));
  if (nu > static_cast<unsigned long>(guard))
    throw CapacityError("induced dimension nu = " + nu.get_str() +
                        " exceeds the size guard " + std::to_string(guard) +
                        " (d=" + std::to_string(d) +
                        ", N=" + std::to_string(N) + ")");
  indices_.reserve(nu.get_ui());
  std::vector<int> prefix(static_cast<std::size_t>(d) + 1, 0);
  emit(prefix, 0, N, d, indices_);
  for (std::size_t k = 0; k < indices_.size(); ++k)
    rank_.emplace(indices_[k].parts, k);
}

}  // namespace kg
