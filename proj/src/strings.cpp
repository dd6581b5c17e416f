#include "ihull/strings.hpp"

#include <algorithm>

namespace ihull {

bool is_hereditary(const Semigroup& S, const ElemSet& A) {
  for (Elem s : A)
    for (Elem t : divisors(S, s))
      if (!set_contains(A, t)) return false;
  return true;
}

bool is_directed(const Semigroup& S, const ElemSet& A) {
  for (Elem s : A)
    for (Elem t : A) {
      bool bound = std::any_of(A.begin(), A.end(),
                               [&](Elem r) { return S.divides(s, r) && S.divides(t, r); });
      if (!bound) return false;
    }
  return true;
}

bool is_string(const Semigroup& S, const ElemSet& A) {
  if (A.empty() || set_contains(A, S.zero())) return false;
  return is_hereditary(S, A) && is_directed(S, A);
}

std::vector<StringSet> all_strings(const Semigroup& S) {
  std::vector<StringSet> out;
  for (Elem s : S.nonzero()) {
    StringSet d = divisors(S, s);
    if (std::find(out.begin(), out.end(), d) == out.end()) out.push_back(std::move(d));
  }
  return out;
}

std::vector<StringSet> all_strings_bruteforce(const Semigroup& S) {
  const ElemSet prime = S.nonzero();
  if (prime.size() > 12)
    throw Error(ErrorKind::Budget, "subset enumeration needs |S'| <= 12");
  std::vector<StringSet> out;
  for (unsigned mask = 1; mask < (1u << prime.size()); ++mask) {
    ElemSet A;
    for (std::size_t i = 0; i < prime.size(); ++i)
      if (mask & (1u << i)) A.push_back(prime[i]);
    if (is_string(S, A)) out.push_back(std::move(A));
  }
  return out;
}

bool is_maximal_string(const Semigroup& S, const StringSet& sigma) {
  for (const auto& mu : all_strings(S))
    if (mu != sigma && set_subset(sigma, mu)) return false;
  return true;
}

std::vector<StringSet> maximal_strings(const Semigroup& S) {
  std::vector<StringSet> out;
  for (const auto& sigma : all_strings(S))
    if (is_maximal_string(S, sigma)) out.push_back(sigma);
  return out;
}

ElemSet interior(const Semigroup& S, const StringSet& sigma) {
  ElemSet out;
  for (Elem s = 0; s < S.size(); ++s)
    for (Elem p = 0; p < S.size(); ++p)
      if (set_contains(sigma, S.mul(s, p))) {
        out.push_back(s);
        break;
      }
  return out;
}

bool is_open(const Semigroup& S, const StringSet& sigma) { return interior(S, sigma) == sigma; }

ElemSet hereditary_closure(const Semigroup& S, const ElemSet& A) {
  ElemSet out;
  for (Elem a : A) out = set_union(out, divisors(S, a));
  return out;
}

bool asymptotically_contained(const Semigroup& S, const ElemSet& D, const ElemSet& E) {
  if (!is_directed(S, D)) throw Error(ErrorKind::Precondition, "set is not directed");
  ElemSet meet = set_intersection(D, E);
  for (Elem d : D) {
    bool cofinal = std::any_of(meet.begin(), meet.end(), [&](Elem e) { return S.divides(d, e); });
    if (!cofinal) return false;
  }
  return true;
}

bool in_F_star(const Semigroup& S, Elem r, const StringSet& sigma) {
  return std::all_of(sigma.begin(), sigma.end(),
                     [&](Elem s) { return S.mul(r, s) != S.zero(); });
}

bool in_E_star(const Semigroup& S, Elem r, const StringSet& sigma) {
  return !set_intersection(sigma, S.right_ideal(r)).empty();
}

StringSet star_forward(const Semigroup& S, Elem r, const StringSet& sigma) {
  if (!in_F_star(S, r, sigma))
    throw Error(ErrorKind::Precondition, "string " + S.render(sigma) + " is outside F*_" + S.name(r));
  return hereditary_closure(S, forward_image(S, r, sigma));
}

StringSet star_backward(const Semigroup& S, Elem r, const StringSet& sigma) {
  if (!in_E_star(S, r, sigma))
    throw Error(ErrorKind::Precondition, "string " + S.render(sigma) + " is outside E*_" + S.name(r));
  ElemSet out;
  for (Elem t = 0; t < S.size(); ++t)
    if (set_contains(sigma, S.mul(r, t))) out.push_back(t);
  return out;
}

StarDomains star_domains(const Semigroup& S, Elem r) {
  StarDomains d;
  for (const auto& sigma : all_strings(S)) {
    if (in_F_star(S, r, sigma)) d.F.push_back(sigma);
    if (in_E_star(S, r, sigma)) d.E.push_back(sigma);
  }
  return d;
}

std::vector<StringSet> f_star_lambda(const Semigroup& S, const ElemSet& lambda) {
  const ElemSet F = F_lambda(S, lambda);
  std::vector<StringSet> out;
  for (const auto& sigma : all_strings(S))
    if (set_subset(sigma, F)) out.push_back(sigma);
  return out;
}

std::vector<StringSet> image_of_F_star(const Semigroup& S, Elem u, const ElemSet& lambda) {
  if (u == kOne) return f_star_lambda(S, lambda);
  const ElemSet image = forward_image(S, u, F_lambda(S, lambda));
  const ElemSet Eu = E_set(S, u);
  std::vector<StringSet> out;
  for (const auto& sigma : all_strings(S)) {
    ElemSet meet = set_intersection(sigma, Eu);
    if (!meet.empty() && set_subset(meet, image)) out.push_back(sigma);
  }
  return out;
}

bool is_degenerate_string(const Semigroup& S, const StringSet& sigma) {
  return sigma.size() == 1 && classify_element(S, sigma.front()).degenerate;
}

StringClass classify_string(const Semigroup& S, const StringSet& sigma) {
  if (!is_string(S, sigma)) throw Error(ErrorKind::Precondition, S.render(sigma) + " is not a string");
  StringClass c;
  c.open = is_open(S, sigma);
  c.maximal = is_maximal_string(S, sigma);
  c.degenerate = is_degenerate_string(S, sigma);
  c.prime_singleton = sigma.size() == 1 && classify_element(S, sigma.front()).prime;
  return c;
}

bool in_sigma_domain(const Semigroup& S, const PartialBijection& phi, const StringSet& sigma) {
  return asymptotically_contained(S, sigma, phi.domain());
}

StringSet sigma_action(const Semigroup& S, const PartialBijection& phi, const StringSet& sigma) {
  if (!in_sigma_domain(S, phi, sigma))
    throw Error(ErrorKind::Precondition, "string " + S.render(sigma) +
                                             " is not asymptotically contained in the domain");
  ElemSet image;
  for (Elem s : sigma)
    if (phi.defined(s)) image.push_back(phi(s));
  return hereditary_closure(S, normalized(std::move(image)));
}

std::vector<StringSet> epsilon(const Semigroup& S, const ElemSet& X) {
  std::vector<StringSet> out;
  for (const auto& sigma : all_strings(S))
    if (asymptotically_contained(S, sigma, X)) out.push_back(sigma);
  return out;
}

std::vector<StringSet> epsilon(const Semigroup& S, const std::vector<ElemSet>& constructible,
                               const ElemSet& X) {
  if (std::find(constructible.begin(), constructible.end(), X) == constructible.end())
    throw Error(ErrorKind::Precondition, S.render(X) + " is not constructible");
  return epsilon(S, X);
}

int word_length(const Semigroup& S, Elem s) {
  if (!S.has_words()) throw Error(ErrorKind::Precondition, "semigroup has no word provenance");
  if (s == S.zero()) throw Error(ErrorKind::Precondition, "length is undefined at zero");
  return static_cast<int>(S.word(s).size());
}

bool is_bounded(const Semigroup& S, const ElemSet& X, int bound) {
  return std::all_of(X.begin(), X.end(), [&](Elem x) { return word_length(S, x) <= bound; });
}

}  // namespace ihull
