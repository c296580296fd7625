#pragma once

#include <string>
#include <vector>

#include "schemelab/capture.hpp"
#include "schemelab/gaps.hpp"
#include "schemelab/posets.hpp"
#include "schemelab/scheme.hpp"
#include "schemelab/typeseq.hpp"

namespace schemelab {

// [[m,n,r], ...]
std::string type_to_json(const TypeSequence& t);
// Accepts [[m,n,r], ...] or {"type": [[m,n,r], ...], ...}. Throws ParseError.
std::vector<Triple> type_from_json(const std::string& text);
// JSON when the text starts with '[' or '{', else the inline "m,n,r;..." form.
std::vector<Triple> parse_type_text(const std::string& text);

// {"type": [[m,n,r]...], "levels": [[[ordinals...] ...] per k]}
std::string scheme_to_json(const Scheme& s, int indent = -1);

// "alpha,k,value" rows for 0 <= k <= K.
std::string xi_csv(const Scheme& s);
std::string norm_csv(const Scheme& s);
// "alpha,beta,value" rows for the full ρ matrix.
std::string rho_csv(const Scheme& s);

// "alpha,L,R" rows, sets as sorted space-separated naturals.
std::string gap_csv(const Pregap& g);

std::string certificate_json(const CaptureCertificate& c);
std::string certificates_json(const std::vector<CaptureCertificate>& cs);

// SEP conditions as {"index": value}, set conditions as [indices].
std::string condition_json(const Condition& c);
std::string conditions_json(const std::vector<Condition>& cs);
std::string separating_json(const Pregap& g, const SeparatingFunction& s);

std::string violations_json(const std::vector<GapViolation>& vs);
std::string violations_json(const std::vector<AxiomViolation>& vs);

}  // namespace schemelab
