#pragma once

#include <cstddef>
#include <cctype>
#include <string>
#include <vector>

#include "hob/errors.hpp"
#include "hob/matrix.hpp"
#include "hob/rational.hpp"
#include "hob/seifert.hpp"
#include "hob/twistword.hpp"

namespace hob {

// Boundary-parallel curve symbol for the i-th boundary component (1-based).
inline std::string boundary_symbol(std::size_t i) { return "d" + std::to_string(i); }

// Parses "d<i>"; returns 0 if the name is not a boundary symbol.
inline std::size_t boundary_symbol_index(const std::string& curve) {
    if (curve.size() < 2 || curve[0] != 'd') return 0;
    for (std::size_t i = 1; i < curve.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(curve[i]))) return 0;
    if (curve[1] == '0') return 0;  // no leading zeros, no d0
    return static_cast<std::size_t>(std::stoull(curve.substr(1)));
}

// Open book with page a genus-g surface with r boundary components, monodromy
// prod_i t_{delta_i}^{m_i} composed with an optional extra twist word over
// non-boundary curves.
struct OpenBook {
    long long page_genus = 0;
    std::vector<long long> boundary_exponents;  // m_1, ..., m_r, all nonzero
    TwistWord extra_word;

    std::size_t boundary_count() const { return boundary_exponents.size(); }

    long long euler_characteristic() const {
        return 2 - 2 * page_genus - static_cast<long long>(boundary_count());
    }

    // The boundary part of the monodromy as a word.
    TwistWord boundary_word() const {
        TwistWord w;
        for (std::size_t i = 0; i < boundary_exponents.size(); ++i)
            w.append(boundary_symbol(i + 1), boundary_exponents[i]);
        return w;
    }

    bool operator==(const OpenBook& o) const {
        return page_genus == o.page_genus && boundary_exponents == o.boundary_exponents &&
               extra_word == o.extra_word;
    }
};

struct Classification {
    bool seifert_fibered = false;
    bool horizontal_realizable = false;
    bool stein_fillable = false;
    bool tight_incompatible = false;
    bool exceptional_case = false;
};

// Gluing map of the p-surgery torus in (m, l) coordinates: mu goes to p*m + l
// and lambda to (p^2-1)*m + p*l, as the columns of a determinant-1 matrix.
// The curve p*mu - lambda lands on m and p*lambda - (p^2-1)*mu on l.
inline IntegerMatrix gluing_matrix(long long p) {
    if (p < 1) throw DomainError("gluing_matrix requires p >= 1");
    IntegerMatrix m(2, 2);
    Int P(std::to_string(p));
    m.at(0, 0) = P;
    m.at(0, 1) = P * P - 1;
    m.at(1, 0) = 1;
    m.at(1, 1) = P;
    return m;
}

// Horizontal open book on the Seifert fibered 3-manifold (g, n; -1/p_i): page
// of genus g with k + |n| boundary components, monodromy one right-handed
// boundary twist for each of the |n| surgered regular fibers followed by a
// p_i-fold twist for each singular fiber. Monodromy is a product of
// right-handed twists only, so the compatible contact structure is Stein
// fillable.
inline OpenBook construct_horizontal_open_book(const SeifertInvariants& inv) {
    EligibilityReport report = validate_eligible(inv);
    if (!report.eligible) {
        // Positive coefficients 1/p correspond to p < 0 surgeries: the
        // construction produces left-handed boundary twists there and the
        // result is not horizontal.
        for (std::size_t i = 0; i < inv.coefficients.size(); ++i)
            if (inv.coefficients[i] > 0 && inv.coefficients[i].get_num() == 1)
                throw DomainError("coefficient r_" + std::to_string(i + 1) + " = " +
                                  to_string(inv.coefficients[i]) +
                                  " gives p < 0: left-handed Dehn twists along the boundary, "
                                  "not a horizontal open book");
        std::string why = "not in eligible class";
        if (!report.reasons.empty()) why += " (" + report.reasons.front() + ")";
        throw DomainError(why);
    }
    if (inv.k() == 0 && inv.euler == 0) throw DomainError("trivial bundle: no binding");

    OpenBook ob;
    ob.page_genus = inv.genus;
    for (long long i = 0; i < -inv.euler; ++i) ob.boundary_exponents.push_back(1);
    for (long long p : report.p) ob.boundary_exponents.push_back(p);
    return ob;
}

// Reads a positive boundary-twist word back as Seifert data: monodromy
// prod t_{delta_i}^{m_i} on a genus-g page with all m_i > 0 is the horizontal
// open book of (g, 0; -1/m_1, ..., -1/m_r).
inline SeifertInvariants seifert_from_boundary_word(long long genus,
                                                    const std::vector<long long>& exponents) {
    if (genus < 0) throw DomainError("genus must be non-negative");
    if (exponents.empty()) throw DomainError("no boundary components");
    SeifertInvariants inv;
    inv.genus = genus;
    inv.euler = 0;
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        if (exponents[i] < 1)
            throw DomainError("exponent m_" + std::to_string(i + 1) + " = " +
                              std::to_string(exponents[i]) + " is not positive");
        inv.coefficients.push_back(make_rational(-1, exponents[i]));
    }
    return inv;
}

// Classification of a boundary-twist monodromy prod t_{delta_i}^{m_i} with
// nonzero exponents: the manifold is always Seifert fibered; the open book is
// realizable horizontally (equivalently, its contact structure Stein
// fillable) iff every m_i > 0; a negative exponent rules out compatibility
// with any tight contact structure except in the undecided low-complexity
// cases g = 0, r in {1, 2}.
inline Classification classify_boundary_word(long long genus,
                                             const std::vector<long long>& exponents) {
    if (genus < 0) throw DomainError("genus must be non-negative");
    for (std::size_t i = 0; i < exponents.size(); ++i)
        if (exponents[i] == 0)
            throw DomainError("exponent m_" + std::to_string(i + 1) + " is zero");
    bool all_positive = true;
    bool some_negative = false;
    for (long long m : exponents) {
        all_positive = all_positive && m > 0;
        some_negative = some_negative || m < 0;
    }
    std::size_t r = exponents.size();
    Classification c;
    c.seifert_fibered = true;
    c.horizontal_realizable = all_positive;
    c.stein_fillable = all_positive;
    c.exceptional_case = some_negative && genus == 0 && (r == 1 || r == 2);
    c.tight_incompatible = some_negative && !c.exceptional_case;
    return c;
}

// Pairing of the contact form dz + radius^2 dtheta against a Seifert fiber
// direction a*dtheta + b*dz near a binding component: a*radius^2 + b, which is
// strictly positive for positive a, b: the algebraic witness that the
// compatible contact structure is horizontal.
inline Rat contact_fiber_pairing(long long a, long long b, const Rat& radius) {
    if (a < 1 || b < 1) throw DomainError("contact_fiber_pairing requires a, b >= 1");
    if (radius < 0) throw DomainError("radius must be non-negative");
    return make_rational(a) * radius * radius + make_rational(b);
}

// --- contact surgery presentations ------------------------------------------

// Base open book plus a list of contact surgeries: sign -1 marks a surgery
// along a curve carrying a right-handed twist, +1 a left-handed one.
struct SurgeryPresentation {
    OpenBook base;
    std::vector<std::pair<std::string, int>> surgeries;

    bool operator==(const SurgeryPresentation& o) const {
        return base == o.base && surgeries == o.surgeries;
    }
};

// Split a monodromy word phi = phi' o psi on a genus-g page with boundary
// symbols d1..dr into the boundary part psi = prod t_{delta_i}^{m_i} and a
// contact (+-1)-surgery list realizing phi'. A boundary component whose
// exponent sums to zero is repaired with a canceling pair: one right-handed
// twist absorbed into psi, the inverse emitted as a (+1) surgery. Interior
// curves are assumed homologically nontrivial by the caller.
inline SurgeryPresentation surgery_presentation(long long genus, std::size_t r,
                                                const TwistWord& w) {
    if (genus < 0) throw DomainError("genus must be non-negative");
    if (r < 1) throw DomainError("page needs at least one boundary component");

    std::vector<long long> m(r, 0);
    for (const Letter& l : w.letters) {
        std::size_t i = boundary_symbol_index(l.curve);
        if (i == 0) continue;
        if (i > r)
            throw DomainError("boundary symbol " + l.curve + " out of range for r = " +
                              std::to_string(r));
        m[i - 1] += l.exponent;
    }

    SurgeryPresentation pres;
    for (const Letter& l : w.letters) {
        if (boundary_symbol_index(l.curve) != 0) continue;
        int sign = l.exponent > 0 ? -1 : +1;
        long long count = l.exponent > 0 ? l.exponent : -l.exponent;
        for (long long i = 0; i < count; ++i) pres.surgeries.emplace_back(l.curve, sign);
    }
    for (std::size_t i = 0; i < r; ++i) {
        if (m[i] == 0) {
            m[i] = 1;  // absorb t_{delta_i}; its inverse becomes a (+1) surgery
            pres.surgeries.emplace_back(boundary_symbol(i + 1), +1);
        }
    }
    pres.base.page_genus = genus;
    pres.base.boundary_exponents = std::move(m);
    return pres;
}

// Reassemble the word a presentation stands for: surgery letters with signs
// mapped back to twist exponents, then the base boundary word. Boundary
// symbols are declared disjoint from every other curve, matching the geometry
// of boundary-parallel twists.
inline TwistWord recombine(const SurgeryPresentation& pres, const TwistWord& context = {}) {
    TwistWord w;
    w.declared_disjoint = context.declared_disjoint;
    w.lantern_configs = context.lantern_configs;
    std::set<std::string> curves;
    for (const auto& [curve, sign] : pres.surgeries) curves.insert(curve);
    for (const Letter& l : context.letters) curves.insert(l.curve);
    for (std::size_t i = 0; i < pres.base.boundary_count(); ++i) curves.insert(boundary_symbol(i + 1));
    for (std::size_t i = 0; i < pres.base.boundary_count(); ++i)
        for (const std::string& c : curves) w.declare_disjoint(boundary_symbol(i + 1), c);
    for (const auto& [curve, sign] : pres.surgeries) w.append(curve, sign == -1 ? 1 : -1);
    for (std::size_t i = 0; i < pres.base.boundary_count(); ++i)
        w.append(boundary_symbol(i + 1), pres.base.boundary_exponents[i]);
    return w;
}

// Positive stabilization of an open book: genus up by one, fresh right-handed
// twist appended to the extra word, binding untouched.
inline OpenBook positive_stabilization(const OpenBook& ob, FreshSymbols& symbols) {
    StabilizationResult r = positive_stabilization(ob.page_genus, ob.extra_word, symbols);
    OpenBook out = ob;
    out.page_genus = r.page_genus;
    out.extra_word = r.word;
    return out;
}

} // namespace hob
