#pragma once

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "bergman/potentials.hpp"
#include "bergman/recursion.hpp"

namespace bergman {

using Json = nlohmann::ordered_json;

/// Parsed potential specification file. Monomial tables are kept in
/// canonical form: Hermitian-closed, sorted, reduced rational strings.
struct PotentialSpec {
    int dimension = 1;
    std::string mode = "exact"; // exact | float
    std::string builtin;        // empty | fock | fubini_study | hyperbolic | radial
    std::vector<mpq_class> radial_coeffs;
    // canonical monomial table: key (alpha | beta), value
    std::map<std::vector<int>, GaussianRational> monomials;
    std::optional<int> declared_order; // trust horizon for truncated tables
};

namespace detail {

inline std::string index_str(const std::vector<int>& key, int n) {
    std::ostringstream os;
    os << "alpha=(";
    for (int i = 0; i < n; ++i) os << (i ? "," : "") << key[static_cast<std::size_t>(i)];
    os << "), beta=(";
    for (int i = 0; i < n; ++i) os << (i ? "," : "") << key[static_cast<std::size_t>(n + i)];
    os << ")";
    return os.str();
}

inline std::vector<int> parse_multi_index(const Json& j, int n, const char* what) {
    if (!j.is_array() || static_cast<int>(j.size()) != n)
        throw SpecError(std::string(what) + " must be an array of length " + std::to_string(n));
    std::vector<int> out;
    for (const auto& e : j) {
        if (!e.is_number_integer() || e.get<int>() < 0)
            throw SpecError(std::string(what) + " entries must be non-negative integers");
        out.push_back(e.get<int>());
    }
    return out;
}

inline mpq_class parse_rational_field(const Json& j, bool allow_number, const char* what) {
    if (j.is_string()) return GaussianRational::parse_rational(j.get<std::string>());
    if (allow_number && j.is_number()) {
        // float-mode convenience; not permitted in exact mode
        mpq_class q(j.get<double>());
        q.canonicalize();
        return q;
    }
    throw SpecError(std::string(what) + " must be a decimal-free rational string");
}

} // namespace detail

inline PotentialSpec parse_potential_spec(const Json& j) {
    PotentialSpec spec;
    if (!j.is_object()) throw SpecError("potential spec must be a JSON object");
    if (!j.contains("dimension") || !j["dimension"].is_number_integer())
        throw SpecError("potential spec needs an integer 'dimension'");
    spec.dimension = j["dimension"].get<int>();
    if (spec.dimension < 1 || spec.dimension > 4)
        throw SpecError("dimension must be between 1 and 4");
    if (j.contains("mode")) {
        if (!j["mode"].is_string()) throw SpecError("mode must be a string");
        spec.mode = j["mode"].get<std::string>();
        if (spec.mode != "exact" && spec.mode != "float")
            throw SpecError("mode must be 'exact' or 'float'");
    }
    if (j.contains("input_order")) {
        if (!j["input_order"].is_number_integer() || j["input_order"].get<int>() < 2)
            throw SpecError("input_order must be an integer >= 2");
        spec.declared_order = j["input_order"].get<int>();
    }

    const bool has_builtin = j.contains("builtin");
    const bool has_monomials = j.contains("monomials");
    if (has_builtin == has_monomials)
        throw SpecError("potential spec needs exactly one of 'builtin' or 'monomials'");

    if (has_builtin) {
        if (!j["builtin"].is_string()) throw SpecError("builtin must be a string");
        spec.builtin = j["builtin"].get<std::string>();
        if (spec.builtin == "fock") {
            // any dimension
        } else if (spec.builtin == "fubini_study" || spec.builtin == "hyperbolic") {
            if (spec.dimension != 1)
                throw SpecError("builtin '" + spec.builtin + "' is one-dimensional");
        } else if (spec.builtin == "radial") {
            if (spec.dimension != 1) throw SpecError("builtin 'radial' is one-dimensional");
            if (!j.contains("radial_coefficients") || !j["radial_coefficients"].is_array() ||
                j["radial_coefficients"].empty())
                throw SpecError("builtin 'radial' needs a non-empty 'radial_coefficients' array");
            for (const auto& c : j["radial_coefficients"])
                spec.radial_coeffs.push_back(
                    detail::parse_rational_field(c, spec.mode == "float", "radial coefficient"));
        } else {
            throw SpecError("unknown builtin '" + spec.builtin + "'");
        }
        return spec;
    }

    if (!j["monomials"].is_array()) throw SpecError("'monomials' must be an array");
    const int n = spec.dimension;
    const bool allow_number = spec.mode == "float";
    for (const auto& entry : j["monomials"]) {
        if (!entry.is_object() || !entry.contains("alpha") || !entry.contains("beta"))
            throw SpecError("each monomial needs 'alpha' and 'beta'");
        std::vector<int> key = detail::parse_multi_index(entry["alpha"], n, "alpha");
        const auto beta = detail::parse_multi_index(entry["beta"], n, "beta");
        key.insert(key.end(), beta.begin(), beta.end());
        const mpq_class re =
            entry.contains("re") ? detail::parse_rational_field(entry["re"], allow_number, "re")
                                 : mpq_class(0);
        const mpq_class im =
            entry.contains("im") ? detail::parse_rational_field(entry["im"], allow_number, "im")
                                 : mpq_class(0);
        const GaussianRational value(re, im);
        if (value.is_zero()) continue;
        auto [it, fresh] = spec.monomials.try_emplace(key, value);
        if (!fresh && !(it->second == value))
            throw SpecError("duplicate monomial with conflicting value at " +
                            detail::index_str(key, n));
    }

    // Hermitian closure: (beta, alpha) = conj(alpha, beta); auto-complete
    // missing partners, reject conflicts
    auto closed = spec.monomials;
    for (const auto& [key, value] : spec.monomials) {
        std::vector<int> partner(key.begin() + n, key.end());
        partner.insert(partner.end(), key.begin(), key.begin() + n);
        const auto it = spec.monomials.find(partner);
        if (it == spec.monomials.end()) {
            auto [cit, fresh] = closed.try_emplace(partner, value.conj());
            if (!fresh && !(cit->second == value.conj()))
                throw SpecError("Hermitian conflict at " + detail::index_str(key, n));
        } else if (!(it->second == value.conj())) {
            throw SpecError("Hermitian conflict at " + detail::index_str(key, n));
        }
    }
    spec.monomials = std::move(closed);

    const std::vector<int> origin(static_cast<std::size_t>(2 * n), 0);
    if (spec.monomials.contains(origin))
        throw SpecError("the constant coefficient c(0,0) must be absent or zero");
    return spec;
}

inline PotentialSpec parse_potential_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SpecError("cannot open spec file '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw SpecError("bad JSON in '" + path + "': " + e.what());
    }
    return parse_potential_spec(j);
}

/// Canonical JSON form; parsing it back yields an identical spec.
inline Json potential_spec_to_json(const PotentialSpec& spec) {
    Json j;
    j["dimension"] = spec.dimension;
    j["mode"] = spec.mode;
    if (spec.declared_order) j["input_order"] = *spec.declared_order;
    if (!spec.builtin.empty()) {
        j["builtin"] = spec.builtin;
        if (spec.builtin == "radial") {
            Json arr = Json::array();
            for (const auto& c : spec.radial_coeffs) arr.push_back(c.get_str());
            j["radial_coefficients"] = arr;
        }
        return j;
    }
    Json arr = Json::array();
    const int n = spec.dimension;
    for (const auto& [key, value] : spec.monomials) {
        Json e;
        e["alpha"] = std::vector<int>(key.begin(), key.begin() + n);
        e["beta"] = std::vector<int>(key.begin() + n, key.end());
        e["re"] = value.real().get_str();
        e["im"] = value.imag().get_str();
        arr.push_back(e);
    }
    j["monomials"] = arr;
    return j;
}

/// Maximum jet order this spec can honestly supply: polynomial tables and
/// builtin generators extend to any order unless the file declared a trust
/// horizon for a hand-truncated table.
inline int spec_order_limit(const PotentialSpec& spec) {
    return spec.declared_order.value_or(127);
}

template <class S>
PotentialJet<S> build_potential(const PotentialSpec& spec, int order) {
    if (order > spec_order_limit(spec))
        throw InsufficientInputOrder("spec declares input order " +
                                     std::to_string(spec_order_limit(spec)) + " but " +
                                     std::to_string(order) + " is required");
    if (!spec.builtin.empty()) {
        if (spec.builtin == "fock") return fock_potential<S>(spec.dimension, order);
        if (spec.builtin == "fubini_study") return fubini_study_potential<S>(order);
        if (spec.builtin == "hyperbolic") return hyperbolic_potential<S>(order);
        return radial_potential<S>(spec.radial_coeffs, order);
    }
    Jet<S> phi(point_layout(spec.dimension), order);
    for (const auto& [key, value] : spec.monomials) {
        if (order_of(key) > order) continue;
        if constexpr (scalar_traits<S>::exact)
            phi.add_term(phi.pack(key), value);
        else
            phi.add_term(phi.pack(key), value.to_complex());
    }
    try {
        return PotentialJet<S>::make(phi);
    } catch (const PreconditionViolated& e) {
        throw SpecError(e.what());
    }
}

inline std::uint64_t fnv1a64(std::string_view text) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

inline std::string input_hash(const Json& canonical) {
    std::ostringstream os;
    os << "fnv1a64:" << std::hex << fnv1a64(canonical.dump());
    return os.str();
}

/// Exact coefficient jets serialize as reduced rational strings; float jets
/// as JSON doubles (shortest round-trip form).
template <class S>
Json jet_to_json(const Jet<S>& jet) {
    if (jet.layout().group_count() != 2)
        throw LayoutMismatch("only two-group jets serialize to (alpha, beta) tables");
    const int n = jet.layout().group(0).size;
    Json arr = Json::array();
    for (const auto& [key, c] : jet.terms()) {
        Json e;
        std::vector<int> alpha, beta;
        for (int i = 0; i < n; ++i) alpha.push_back(key[static_cast<std::size_t>(i)]);
        for (int i = 0; i < n; ++i) beta.push_back(key[static_cast<std::size_t>(n + i)]);
        e["alpha"] = alpha;
        e["beta"] = beta;
        if constexpr (scalar_traits<S>::exact) {
            e["re"] = c.real().get_str();
            e["im"] = c.imag().get_str();
        } else {
            e["re"] = c.real();
            e["im"] = c.imag();
        }
        arr.push_back(e);
    }
    return arr;
}

inline void write_text_atomic(const std::string& path, const std::string& text) {
    const std::filesystem::path target(path);
    const std::filesystem::path tmp = target.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw SpecError("cannot write to '" + tmp.string() + "'");
        out << text;
    }
    std::filesystem::rename(tmp, target);
}

inline void write_report_atomic(const std::string& path, const Json& report) {
    write_text_atomic(path, report.dump(2) + "\n");
}

} // namespace bergman
