#pragma once

#include <cstddef>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

namespace wcm {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input files (graph files, ideal files).
struct ParseError : Error {
    using Error::Error;
};

// An operation was called outside its stated domain.
struct PreconditionError : Error {
    using Error::Error;
};

// A configured size cap would be exceeded.
struct LimitError : Error {
    using Error::Error;
};

struct NotChordalError : PreconditionError {
    using PreconditionError::PreconditionError;
};

// Size caps for the exponential parts of the library.
struct Limits {
    std::size_t facet_size = 8;         // bad-forest search
    std::size_t polarized_vars = 18;    // CM oracle
    std::size_t cover_vertices = 12;    // minimal cover enumeration
    std::size_t cover_edges = 24;
    std::size_t faces = std::size_t{1} << 18;  // simplicial complexes

    // Overrides from a JSON object such as
    // {"facetSize":6,"polarizedVars":16,"coverVertices":10,"coverEdges":20,"faces":65536}.
    static Limits from_json(const nlohmann::json& j) {
        Limits l;
        if (!j.is_object()) throw ParseError("limits: expected a JSON object");
        auto read = [&](const char* key, std::size_t& out) {
            if (!j.contains(key)) return;
            const auto& v = j.at(key);
            if (!v.is_number_unsigned()) throw ParseError(std::string("limits: '") + key + "' must be a non-negative integer");
            out = v.get<std::size_t>();
        };
        read("facetSize", l.facet_size);
        read("polarizedVars", l.polarized_vars);
        read("coverVertices", l.cover_vertices);
        read("coverEdges", l.cover_edges);
        read("faces", l.faces);
        return l;
    }

    nlohmann::json to_json() const {
        return {{"facetSize", facet_size},
                {"polarizedVars", polarized_vars},
                {"coverVertices", cover_vertices},
                {"coverEdges", cover_edges},
                {"faces", faces}};
    }

    // Defaults, overridden by the WCM_LIMITS environment variable when set.
    static Limits from_env() {
        const char* blob = std::getenv("WCM_LIMITS");
        if (blob == nullptr || *blob == '\0') return {};
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(blob);
        } catch (const nlohmann::json::parse_error& e) {
            throw ParseError(std::string("WCM_LIMITS: ") + e.what());
        }
        return from_json(j);
    }
};

}  // namespace wcm
