#pragma once

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hitp/cohit.hpp"
#include "hitp/glinv.hpp"
#include "hitp/report.hpp"
#include "hitp/steenrod.hpp"

namespace hitp::cli {

inline constexpr int kSchema = 1;

using Exponents = std::vector<Exponent>;

/// One nonzero coordinate of an invariant vector; index is 1-based.
struct InvariantTerm {
    std::size_t index;
    Exponents exponents;
    unsigned coefficient;
    friend bool operator==(const InvariantTerm&, const InvariantTerm&) = default;
};

struct BasisReport {
    std::size_t h;
    unsigned p;
    std::uint64_t m;
    std::string mode;
    std::string order;
    std::size_t dim;
    std::size_t ambient;
    std::size_t rank;
    std::vector<Exponents> representatives;
    friend bool operator==(const BasisReport&, const BasisReport&) = default;
};

struct InvariantReport {
    std::size_t h;
    unsigned p;
    std::uint64_t m;
    std::string mode;
    std::string order;
    std::size_t dim;
    std::size_t invariant_dim;
    std::vector<InvariantTerm> invariant; // first kernel vector, empty if none
    friend bool operator==(const InvariantReport&, const InvariantReport&) = default;
};

struct SliceReport {
    std::uint64_t n;
    std::size_t h;
    unsigned p;
    std::uint64_t m;
    std::string mode;
    std::string order;
    std::size_t dim;
    std::size_t ambient;
    std::size_t rank;
    std::vector<Exponents> basis;
    std::size_t invariant_dim;
    std::vector<InvariantTerm> invariant;
    friend bool operator==(const SliceReport&, const SliceReport&) = default;
};

struct DigitLevel {
    unsigned s;
    unsigned d;
    std::vector<std::vector<unsigned>> pivots;
    std::vector<std::vector<unsigned>> kept;
    friend bool operator==(const DigitLevel&, const DigitLevel&) = default;
};

struct DigitReport {
    std::size_t h;
    unsigned p;
    std::uint64_t m;
    std::vector<DigitLevel> levels;
    friend bool operator==(const DigitReport&, const DigitReport&) = default;
};

// ---- builders ----

inline std::vector<InvariantTerm> invariant_terms(const CohitBasis& basis, const InvariantSpace& inv)
{
    std::vector<InvariantTerm> terms;
    if (inv.dimension() == 0)
        return terms;
    const auto& v = inv.kernel_vectors.front();
    for (std::size_t j = 0; j < v.size(); ++j)
        if (v[j] != 0)
            terms.push_back({j + 1, basis.monomial(j).exps, v[j]});
    return terms;
}

inline BasisReport make_basis_report(const CohitBasis& b)
{
    BasisReport r{b.h, b.p, b.m, std::string(to_string(b.mode)), std::string(to_string(b.order)),
                  b.dimension(), b.ambient(), b.rank, {}};
    for (const auto& mono : b.monomials())
        r.representatives.push_back(mono.exps);
    return r;
}

inline InvariantReport make_invariant_report(const CohitBasis& b, const InvariantSpace& inv)
{
    return {b.h, b.p, b.m, std::string(to_string(b.mode)), std::string(to_string(b.order)),
            b.dimension(), inv.dimension(), invariant_terms(b, inv)};
}

inline SliceReport make_slice_report(std::uint64_t n, const CohitBasis& b, const InvariantSpace& inv)
{
    SliceReport r{n, b.h, b.p, b.m, std::string(to_string(b.mode)), std::string(to_string(b.order)),
                  b.dimension(), b.ambient(), b.rank, {}, inv.dimension(), invariant_terms(b, inv)};
    for (const auto& mono : b.monomials())
        r.basis.push_back(mono.exps);
    return r;
}

inline DigitReport make_digit_report(std::size_t h, PrimeModulus p, std::uint64_t m)
{
    DigitReport r{h, p, m, {}};
    for (auto& lv : digit_report(h, p, m))
        r.levels.push_back({lv.s, lv.d, std::move(lv.pivots), std::move(lv.kept)});
    return r;
}

// ---- text ----

/// u, v, w, then u4, u5, ...
inline std::string exterior_symbols(std::size_t h)
{
    static constexpr const char* names[] = {"u", "v", "w"};
    std::string out;
    for (std::size_t i = 0; i < h; ++i)
        out += i < 3 ? std::string(names[i]) : "u" + std::to_string(i + 1);
    return out;
}

inline std::string tuple_list(const std::vector<std::vector<unsigned>>& sigs)
{
    std::string out = "[";
    for (std::size_t k = 0; k < sigs.size(); ++k) {
        if (k)
            out += ", ";
        out += "(";
        for (std::size_t i = 0; i < sigs[k].size(); ++i) {
            if (i)
                out += ", ";
            out += std::to_string(sigs[k][i]);
        }
        out += ")";
    }
    return out + "]";
}

inline std::string header_line(std::size_t dim, std::size_t ambient, std::size_t rank)
{
    return "dim = " + std::to_string(dim) + " (ambient " + std::to_string(ambient) + ", rank(Im) " +
           std::to_string(rank) + ")";
}

inline std::string join_terms(const std::vector<InvariantTerm>& terms, const char* symbol)
{
    std::string out;
    for (const auto& t : terms) {
        if (!out.empty())
            out += " + ";
        out += std::to_string(t.coefficient) + "*" + symbol + "_" + std::to_string(t.index);
    }
    return out;
}

/// limit 0 shows every representative.
inline std::string render_text(const BasisReport& r, std::size_t limit = 0)
{
    std::ostringstream os;
    os << "Q(P_" << r.h << ")_m over F_" << r.p << ": " << header_line(r.dim, r.ambient, r.rank) << "\n";
    if (r.dim == 0) {
        os << "  Basis: [empty]\n";
        return os.str();
    }
    const std::size_t shown = limit == 0 ? r.dim : std::min(limit, r.dim);
    os << "  Admissible monomial basis (order=" << r.order << ", mode=" << r.mode << "; showing " << shown << " of "
       << r.dim << "):\n";
    for (std::size_t t = 0; t < shown; ++t) {
        Monomial mono(r.representatives[t]);
        os << "    e_" << t + 1 << " := " << exponent_list(mono) << "   ( " << to_string(mono) << " )\n";
    }
    return os.str();
}

inline std::string render_text(const InvariantReport& r)
{
    std::ostringstream os;
    os << ">> Invariants in Q(P_" << r.h << ")_m over F_" << r.p << " (m=" << r.m << ")\n";
    if (r.dim == 0) {
        os << "    Quotient is zero; invariants dim = 0.\n";
        return os.str();
    }
    os << "    dim Invariants = " << r.invariant_dim << "\n";
    if (!r.invariant.empty()) {
        os << "    INV = " << join_terms(r.invariant, "e") << "\n";
        for (const auto& t : r.invariant)
            os << "      e_" << t.index << " : monomial exponents " << exponent_list(Monomial(t.exponents)) << "\n";
    }
    return os.str();
}

inline std::string render_text(const SliceReport& r, std::size_t limit = 0)
{
    std::ostringstream os;
    const std::string space = "QH^" + std::to_string(r.n) + "(" + std::to_string(r.h) + ")^(Lambda^" +
                              std::to_string(r.h) + ")";
    os << "== " << space << " over F_" << r.p << " (top exterior) with n=2m+h, m=" << r.m << " ==\n";
    os << "    dim " << space << " = " << r.dim << " (ambient " << r.ambient << ", rank(Im) " << r.rank << ")\n";
    const std::size_t shown = limit == 0 ? r.dim : std::min(limit, r.dim);
    os << "  Admissible basis of the slice (write U:=" << exterior_symbols(r.h) << "). Showing " << shown << " of "
       << r.dim << ":\n";
    for (std::size_t t = 0; t < shown; ++t)
        os << "    E_" << t + 1 << " := [(" << to_string(Monomial(r.basis[t])) << ")U]\n";
    os << "  Invariant subspace in " << space << ": dim = " << r.invariant_dim << "\n";
    if (!r.invariant.empty())
        os << "    INV = " << join_terms(r.invariant, "E") << "\n";
    return os.str();
}

inline std::string render_text(const DigitReport& r)
{
    std::ostringstream os;
    os << "p=" << r.p << ", h=" << r.h << ", m=" << r.m << "\n";
    for (const auto& lv : r.levels) {
        os << "Level s=" << lv.s << ": d_s=" << lv.d << "\n";
        os << "  Pure pivot signatures (annihilated by H_s): " << tuple_list(lv.pivots) << "\n";
        os << "  Non-pivot signatures kept (count=" << lv.kept.size() << "): " << tuple_list(lv.kept) << "\n";
    }
    return os.str();
}

inline std::string render_triangularity(const std::vector<LevelTriangularity>& levels)
{
    std::ostringstream os;
    os << "Graded level blocks under cartan-lex rows:\n";
    for (const auto& lt : levels) {
        os << "  s=" << lt.level << ": columns " << lt.columns << ", nonzero " << lt.nonzero_columns
           << ", distinct leading rows " << lt.distinct_leading_rows << (lt.echelon() ? "  echelon" : "  NOT echelon")
           << "\n";
    }
    return os.str();
}

// ---- json ----

using nlohmann::json;

namespace detail {
inline void check_schema(const json& j, const char* command)
{
    if (j.at("schema").get<int>() != kSchema)
        throw DomainError("unsupported schema version");
    if (j.at("command").get<std::string>() != command)
        throw DomainError(std::string("expected a '") + command + "' document");
}
} // namespace detail

inline void to_json(json& j, const InvariantTerm& t)
{
    j = json{{"index", t.index}, {"exponents", t.exponents}, {"coefficient", t.coefficient}};
}
inline void from_json(const json& j, InvariantTerm& t)
{
    j.at("index").get_to(t.index);
    j.at("exponents").get_to(t.exponents);
    j.at("coefficient").get_to(t.coefficient);
}

inline void to_json(json& j, const BasisReport& r)
{
    j = json{{"schema", kSchema}, {"command", "basis"}, {"h", r.h},         {"p", r.p},
             {"m", r.m},          {"mode", r.mode},     {"order", r.order}, {"dim", r.dim},
             {"ambient", r.ambient}, {"rank", r.rank},  {"representatives", r.representatives}};
}
inline void from_json(const json& j, BasisReport& r)
{
    detail::check_schema(j, "basis");
    j.at("h").get_to(r.h);
    j.at("p").get_to(r.p);
    j.at("m").get_to(r.m);
    j.at("mode").get_to(r.mode);
    j.at("order").get_to(r.order);
    j.at("dim").get_to(r.dim);
    j.at("ambient").get_to(r.ambient);
    j.at("rank").get_to(r.rank);
    j.at("representatives").get_to(r.representatives);
}

inline void to_json(json& j, const InvariantReport& r)
{
    j = json{{"schema", kSchema}, {"command", "invariants"}, {"h", r.h},     {"p", r.p},
             {"m", r.m},          {"mode", r.mode},          {"order", r.order}, {"dim", r.dim},
             {"invariant_dim", r.invariant_dim}, {"invariant", r.invariant}};
}
inline void from_json(const json& j, InvariantReport& r)
{
    detail::check_schema(j, "invariants");
    j.at("h").get_to(r.h);
    j.at("p").get_to(r.p);
    j.at("m").get_to(r.m);
    j.at("mode").get_to(r.mode);
    j.at("order").get_to(r.order);
    j.at("dim").get_to(r.dim);
    j.at("invariant_dim").get_to(r.invariant_dim);
    j.at("invariant").get_to(r.invariant);
}

inline void to_json(json& j, const SliceReport& r)
{
    j = json{{"schema", kSchema},     {"command", "slice"}, {"n", r.n},
             {"h", r.h},              {"p", r.p},           {"m", r.m},
             {"mode", r.mode},        {"order", r.order},   {"dim", r.dim},
             {"ambient", r.ambient},  {"rank", r.rank},     {"basis", r.basis},
             {"invariant_dim", r.invariant_dim}, {"invariant", r.invariant}};
}
inline void from_json(const json& j, SliceReport& r)
{
    detail::check_schema(j, "slice");
    j.at("n").get_to(r.n);
    j.at("h").get_to(r.h);
    j.at("p").get_to(r.p);
    j.at("m").get_to(r.m);
    j.at("mode").get_to(r.mode);
    j.at("order").get_to(r.order);
    j.at("dim").get_to(r.dim);
    j.at("ambient").get_to(r.ambient);
    j.at("rank").get_to(r.rank);
    j.at("basis").get_to(r.basis);
    j.at("invariant_dim").get_to(r.invariant_dim);
    j.at("invariant").get_to(r.invariant);
}

inline void to_json(json& j, const DigitLevel& lv)
{
    j = json{{"s", lv.s}, {"d", lv.d}, {"pivots", lv.pivots}, {"kept", lv.kept}};
}
inline void from_json(const json& j, DigitLevel& lv)
{
    j.at("s").get_to(lv.s);
    j.at("d").get_to(lv.d);
    j.at("pivots").get_to(lv.pivots);
    j.at("kept").get_to(lv.kept);
}

inline void to_json(json& j, const DigitReport& r)
{
    j = json{{"schema", kSchema}, {"command", "digit-report"}, {"h", r.h}, {"p", r.p}, {"m", r.m},
             {"levels", r.levels}};
}
inline void from_json(const json& j, DigitReport& r)
{
    detail::check_schema(j, "digit-report");
    j.at("h").get_to(r.h);
    j.at("p").get_to(r.p);
    j.at("m").get_to(r.m);
    j.at("levels").get_to(r.levels);
}

} // namespace hitp::cli
