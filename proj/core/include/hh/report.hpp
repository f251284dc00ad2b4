#pragma once

#include <string>
#include <vector>

#include "hh/catalog.hpp"
#include "hh/koszul.hpp"
#include "hh/quotient.hpp"

namespace hh {

// Rendering for the command-line surface. Every function returns the full
// document text ending in a newline; JSON uses two-space indentation and a
// fixed key order, so equal inputs produce byte-identical output.

std::string gb_json(const GroebnerBasis& gb);
std::string gb_text(const GroebnerBasis& gb);  // one element per line, ascending

std::string nf_json(const DivisionResult& r, const std::vector<Polynomial>& divisors);
std::string nf_text(const DivisionResult& r);

std::string member_json(bool member);
std::string member_text(bool member);

std::string basis_json(const QuotientBasis& qb);
std::string basis_text(const QuotientBasis& qb);

std::string milnor_json(const QuotientBasis& milnor);
std::string milnor_text(const QuotientBasis& milnor);

std::string hilbert_json(const HilbertFunction& hf);
std::string hilbert_text(const HilbertFunction& hf);

// Degrees carry their per-label dimension vector ("hilbert", w_lo..w_hi);
// verbose adds the per-slice rank table.
std::string cohomology_json(const CohomologyReport& rep, bool verbose);
std::string cohomology_text(const CohomologyReport& rep, bool verbose);

// One check per line plus, at the end, the dimension table of the verified
// cohomology (rows = cases, columns H^0, H^1, H^2, H^2p, H^2p+1).
std::string catalog_json(const std::vector<VerificationOutcome>& outcomes);
std::string catalog_csv(const std::vector<VerificationOutcome>& outcomes);
std::string catalog_text(const std::vector<VerificationOutcome>& outcomes);

bool catalog_all_pass(const std::vector<VerificationOutcome>& outcomes);

}  // namespace hh
