#include "evidence/random.hpp"

#include "evidence/error.hpp"

namespace evidence {

std::uint64_t CounterStream::below(std::uint64_t bound) {
  // Reject the top partial block so every residue is equally likely.
  const std::uint64_t limit = bound * (UINT64_MAX / bound);
  while (true) {
    std::uint64_t word = next();
    if (word < limit) return word % bound;
  }
}

DiscreteSampler::DiscreteSampler(std::span<const Rational> probs) {
  if (probs.empty()) throw Error(Errc::invalid_spec, "no outcomes to sample from");
  mpz_class lcm = 1;
  Rational total = 0;
  for (const auto& p : probs) {
    if (p.sign() < 0) throw Error(Errc::invalid_spec, "negative probability " + p.str());
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), p.get().get_den().get_mpz_t());
    total += p;
  }
  if (total != Rational(1)) {
    throw Error(Errc::invalid_spec, "probabilities sum to " + total.str() + ", not 1");
  }
  if (!mpz_fits_ulong_p(lcm.get_mpz_t())) {
    throw Error(Errc::invalid_spec, "common denominator " + lcm.get_str() + " exceeds 64 bits");
  }
  denominator_ = lcm.get_ui();
  std::uint64_t running = 0;
  cumulative_.reserve(probs.size());
  for (const auto& p : probs) {
    mpz_class share = p.get().get_num() * (lcm / p.get().get_den());
    running += share.get_ui();
    cumulative_.push_back(running);
  }
}

std::size_t DiscreteSampler::draw(CounterStream& stream) const {
  const std::uint64_t u = stream.below(denominator_);
  for (std::size_t i = 0; i < cumulative_.size(); ++i) {
    if (u < cumulative_[i]) return i;
  }
  return cumulative_.size() - 1;
}

}  // namespace evidence
