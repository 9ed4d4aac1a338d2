#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hob/errors.hpp"
#include "hob/rational.hpp"

namespace hob {

// Seifert invariants (g, n; r_1, ..., r_k): base genus g >= 0, bundle Euler
// number n, and k nonzero rational coefficients. The eligible class handled
// by the open book construction has n <= 0 and every r_i = -1/p_i for a
// positive integer p_i.
struct SeifertInvariants {
    long long genus = 0;
    long long euler = 0;
    std::vector<Rat> coefficients;

    std::size_t k() const { return coefficients.size(); }

    bool operator==(const SeifertInvariants& o) const {
        return genus == o.genus && euler == o.euler && coefficients == o.coefficients;
    }
};

inline SeifertInvariants make_invariants(long long genus, long long euler,
                                         std::vector<Rat> coefficients) {
    if (genus < 0) throw DomainError("genus must be non-negative");
    for (const Rat& r : coefficients)
        if (r == 0) throw DomainError("Seifert coefficients must be nonzero");
    return SeifertInvariants{genus, euler, std::move(coefficients)};
}

struct EligibilityReport {
    bool eligible = false;
    std::vector<long long> p;            // derived p_i = -1/r_i, set on success
    std::vector<std::size_t> offending;  // coefficient indices violating -1/p form
    std::vector<std::string> reasons;    // per-field messages

    explicit operator bool() const { return eligible; }
};

// Membership test for the eligible class: n <= 0 and every r_i = -1/p_i with
// p_i a positive integer. Total; never throws.
inline EligibilityReport validate_eligible(const SeifertInvariants& inv) {
    EligibilityReport report;
    report.eligible = true;
    if (inv.euler > 0) {
        report.eligible = false;
        report.reasons.push_back("euler: n > 0");
    }
    for (std::size_t i = 0; i < inv.coefficients.size(); ++i) {
        const Rat& r = inv.coefficients[i];
        // Canonical form makes the check syntactic: -1/p has numerator -1.
        if (r.get_num() != -1) {
            report.eligible = false;
            report.offending.push_back(i);
            report.reasons.push_back("coefficients[" + std::to_string(i) +
                                     "]: " + to_string(r) + " is not -1/p for a positive integer p");
        } else if (!fits_int64(Int(r.get_den()))) {
            report.eligible = false;
            report.offending.push_back(i);
            report.reasons.push_back("coefficients[" + std::to_string(i) + "]: p = " +
                                     r.get_den().get_str() + " exceeds the supported 64-bit range");
        }
    }
    if (report.eligible) {
        report.p.reserve(inv.coefficients.size());
        for (const Rat& r : inv.coefficients) report.p.push_back(to_int64(Int(r.get_den())));
    }
    return report;
}

// Absorb every p_i = 1 coefficient (i.e. r_i = -1) into the Euler number,
// decreasing n by one per removal. Matches blowing down the corresponding
// (+1)-leaf of the star diagram.
inline SeifertInvariants canonicalize(const SeifertInvariants& inv) {
    EligibilityReport report = validate_eligible(inv);
    if (!report.eligible) throw DomainError("not in eligible class");
    SeifertInvariants out;
    out.genus = inv.genus;
    out.euler = inv.euler;
    for (const Rat& r : inv.coefficients) {
        if (r == -1)
            out.euler -= 1;
        else
            out.coefficients.push_back(r);
    }
    return out;
}

// Rational Euler number e = n + sum r_i. The verification invariant preserved
// by the plumbing calculus; cross-checked against the continued-fraction
// route on graphs.
inline Rat rational_euler(const SeifertInvariants& inv) {
    Rat e = make_rational(inv.euler);
    for (const Rat& r : inv.coefficients) e += r;
    return e;
}

} // namespace hob
