#pragma once

#include <stdexcept>
#include <string>

namespace parfact {

enum class errc {
    self_loop,
    duplicate_edge,
    vertex_out_of_range,
    empty_graph,
    bad_params,
    vertex_in_excluded,
    overlapping_sets,
    too_large,
    even_k,
    k_too_small,
    bad_range,
    bad_parity,
    bad_m,
    infeasible_vertex,
    not_perfect,
    edge_not_in_graph,
    syntax_error,
    bad_config,
    internal,
};

const char* errc_name(errc code);

class error : public std::runtime_error {
public:
    error(errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
    throw error(code, message);
}

inline void require(bool condition, errc code, const std::string& message) {
    if (!condition) fail(code, message);
}

// Always-on internal invariant check (survives NDEBUG builds).
#define PARFACT_CHECK(cond)                                                              \
    do {                                                                                 \
        if (!(cond))                                                                     \
            ::parfact::fail(::parfact::errc::internal, "invariant violated: " #cond);    \
    } while (0)

} // namespace parfact
