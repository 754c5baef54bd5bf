#include "ppmine/side_constraints.hpp"

#include <algorithm>

#include "ppmine/error.hpp"

namespace ppmine {

RegularFilter::RegularFilter(std::shared_ptr<const Dfa> dfa) : dfa_(std::move(dfa)) {
    if (!dfa_) throw ParameterError("regular filter needs an automaton");
    doomed_ = dfa_->doomed();
}

Status RegularFilter::propagate(PatternVars& vars, std::size_t /*assigned*/) {
    const Dfa& a = *dfa_;
    if (a.num_symbols() != vars.num_items() + 1) {
        throw ParameterError("automaton alphabet does not match the item dictionary plus end marker");
    }
    const std::size_t ell = vars.ell();
    const std::size_t n = a.num_states();
    const std::size_t symbols = a.num_symbols();

    // Layer k holds the states reached after reading P1..Pk.
    forward_.assign((ell + 1) * n, 0);
    backward_.assign((ell + 1) * n, 0);
    if (doomed_[a.start()]) return Status::Fail;
    forward_[a.start()] = 1;

    for (std::size_t k = 1; k <= ell; ++k) {
        const char* prev = &forward_[(k - 1) * n];
        char* cur = &forward_[k * n];
        bool any = false;
        for (std::uint32_t q = 0; q < n; ++q) {
            if (!prev[q]) continue;
            vars.for_each(k, [&](Value v) {
                const auto t = a.next(q, v);
                if (!doomed_[t]) {
                    cur[t] = 1;
                    any = true;
                }
            });
        }
        if (!any) return Status::Fail;
    }

    bool accepted = false;
    for (std::uint32_t q = 0; q < n; ++q) {
        if (forward_[ell * n + q] && a.accepting(q)) {
            backward_[ell * n + q] = 1;
            accepted = true;
        }
    }
    if (!accepted) return Status::Fail;

    supported_.assign(ell * symbols, 0);
    for (std::size_t k = ell; k >= 1; --k) {
        const char* fwd = &forward_[(k - 1) * n];
        const char* next_layer = &backward_[k * n];
        char* back = &backward_[(k - 1) * n];
        char* sup = &supported_[(k - 1) * symbols];
        for (std::uint32_t q = 0; q < n; ++q) {
            if (!fwd[q]) continue;
            vars.for_each(k, [&](Value v) {
                if (next_layer[a.next(q, v)]) {
                    back[q] = 1;
                    sup[v] = 1;
                }
            });
        }
    }

    for (std::size_t k = 1; k <= ell; ++k) {
        const char* sup = &supported_[(k - 1) * symbols];
        for (Value v : vars.values(k)) {
            if (!sup[v]) vars.remove(k, v);
        }
        if (vars.empty(k)) return Status::Fail;
    }
    return Status::Continue;
}

} // namespace ppmine
