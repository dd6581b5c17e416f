#pragma once

#include <vector>

#include "ihull/hull.hpp"
#include "ihull/semigroup.hpp"

namespace ihull {

using StringSet = ElemSet;

bool is_hereditary(const Semigroup& S, const ElemSet& A);
bool is_directed(const Semigroup& S, const ElemSet& A);
bool is_string(const Semigroup& S, const ElemSet& A);

// S* for finite S: the distinct delta_s, in order of the first s producing them.
std::vector<StringSet> all_strings(const Semigroup& S);
// Subset enumeration; refuses |S'| > 12.
std::vector<StringSet> all_strings_bruteforce(const Semigroup& S);
std::vector<StringSet> maximal_strings(const Semigroup& S);
bool is_maximal_string(const Semigroup& S, const StringSet& sigma);

ElemSet interior(const Semigroup& S, const StringSet& sigma);
bool is_open(const Semigroup& S, const StringSet& sigma);

ElemSet hereditary_closure(const Semigroup& S, const ElemSet& A);
// D is asymptotically contained in E: E n D is cofinal in D.
bool asymptotically_contained(const Semigroup& S, const ElemSet& D, const ElemSet& E);

// r * sigma = h(r sigma), needs 0 not in r sigma.
StringSet star_forward(const Semigroup& S, Elem r, const StringSet& sigma);
// r^-1 * sigma = {t : rt in sigma}, needs sigma n rS nonempty.
StringSet star_backward(const Semigroup& S, Elem r, const StringSet& sigma);
bool in_F_star(const Semigroup& S, Elem r, const StringSet& sigma);
bool in_E_star(const Semigroup& S, Elem r, const StringSet& sigma);

struct StarDomains {
  std::vector<StringSet> F, E;
};
StarDomains star_domains(const Semigroup& S, Elem r);
std::vector<StringSet> f_star_lambda(const Semigroup& S, const ElemSet& lambda);
// theta*_u(F*_Lambda) through the characterization
// "nonempty sigma n E_u contained in theta_u(F_Lambda)".
std::vector<StringSet> image_of_F_star(const Semigroup& S, Elem u, const ElemSet& lambda);

struct StringClass {
  bool open = false;
  bool maximal = false;
  bool degenerate = false;
  bool prime_singleton = false;
};
StringClass classify_string(const Semigroup& S, const StringSet& sigma);
bool is_degenerate_string(const Semigroup& S, const StringSet& sigma);

// phi^Sigma(sigma) = h(phi(F_phi n sigma)), for sigma asymptotically in F_phi.
StringSet sigma_action(const Semigroup& S, const PartialBijection& phi, const StringSet& sigma);
bool in_sigma_domain(const Semigroup& S, const PartialBijection& phi, const StringSet& sigma);

// epsilon(X) = {sigma in S* : sigma asymptotically in X}, returned in S* order.
std::vector<StringSet> epsilon(const Semigroup& S, const ElemSet& X);
// Same, refusing X outside the given constructible family.
std::vector<StringSet> epsilon(const Semigroup& S, const std::vector<ElemSet>& constructible,
                               const ElemSet& X);

int word_length(const Semigroup& S, Elem s);
bool is_bounded(const Semigroup& S, const ElemSet& X, int bound);

}  // namespace ihull
