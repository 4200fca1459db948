#include "garside/presentation.hpp"

namespace garside {

PermutationBackend::PermutationBackend(Permutation delta, std::vector<Permutation> atoms,
                                       int delta_length)
    : identity_(delta.size()),
      delta_(std::move(delta)),
      atoms_(std::move(atoms)),
      delta_length_(delta_length) {
  Permutation power(delta_.size());
  do {
    delta_powers_.push_back(power);
    power = compose(power, delta_);
  } while (!power.is_identity());
}

PermutationBackend::Simple PermutationBackend::left_quotient(const Simple& s,
                                                             const Simple& t) const {
  // s * q = t  =>  q = s^{-1} t, i.e. first undo s, then t.
  return compose(s.inverse(), t);
}

PermutationBackend::Simple PermutationBackend::right_complement(const Simple& s) const {
  return compose(s.inverse(), delta_);
}

PermutationBackend::Simple PermutationBackend::left_complement(const Simple& s) const {
  return compose(delta_, s.inverse());
}

PermutationBackend::Simple PermutationBackend::tau(const Simple& s, int m) const {
  const int order = tau_order();
  int e = m % order;
  if (e < 0) {
    e += order;
  }
  if (e == 0) {
    return s;
  }
  return garside::conjugate(s, delta_powers_[static_cast<std::size_t>(e)]);
}

}  // namespace garside
