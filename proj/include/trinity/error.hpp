#pragma once

#include <stdexcept>
#include <string>

namespace trinity {

enum class Errc {
    non_planar,
    disconnected,
    not_balanced,
    infeasible,
    unknown_vertex,
    too_large,
    degree_nonzero,
    not_a_hypertree,
    not_found,
    invalid_base,
    no_chip,
    root_routing,
    invalid_arborescence,
    root_mismatch,
    not_bipartite,
    parse,
    semantic,
};

inline const char* errc_name(Errc c) {
    switch (c) {
    case Errc::non_planar: return "NonPlanar";
    case Errc::disconnected: return "Disconnected";
    case Errc::not_balanced: return "NotBalanced";
    case Errc::infeasible: return "Infeasible";
    case Errc::unknown_vertex: return "UnknownVertex";
    case Errc::too_large: return "TooLarge";
    case Errc::degree_nonzero: return "DegreeNonzero";
    case Errc::not_a_hypertree: return "NotAHypertree";
    case Errc::not_found: return "NotFound";
    case Errc::invalid_base: return "InvalidBase";
    case Errc::no_chip: return "NoChip";
    case Errc::root_routing: return "RootRouting";
    case Errc::invalid_arborescence: return "InvalidArborescence";
    case Errc::root_mismatch: return "RootMismatch";
    case Errc::not_bipartite: return "NotBipartite";
    case Errc::parse: return "ParseError";
    case Errc::semantic: return "SemanticError";
    }
    return "Error";
}

class Error : public std::runtime_error {
public:
    Error(Errc c, const std::string& msg)
        : std::runtime_error(std::string(errc_name(c)) + ": " + msg), code(c) {}
    Errc code;
};

[[noreturn]] inline void fail(Errc c, const std::string& msg) { throw Error(c, msg); }

inline void require(bool ok, Errc c, const std::string& msg) {
    if (!ok) fail(c, msg);
}

} // namespace trinity
