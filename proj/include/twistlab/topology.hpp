#pragma once

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "twistlab/group.hpp"
#include "twistlab/parallel.hpp"
#include "twistlab/window.hpp"

namespace twistlab {
namespace topo {

using grp::GeneratingSet;
using grp::GroupOracle;
using grp::Subset;

enum class Side { left, right };

inline std::string side_name(Side s) { return s == Side::left ? "left" : "right"; }

// Exact exception set {n in window : g x^n not in U} (left) or {n : x^n g not
// in U} (right). Powers are built incrementally, one multiplication per step,
// walking outward from n = 0 in both directions.
template <GroupOracle G>
std::vector<std::int64_t> coset_exception_set(const G& g, const Subset<G>& u,
                                              const typename G::Elem& base,
                                              const typename G::Elem& x, const Window& w,
                                              Side side) {
    const auto xi = g.inv(x);
    std::vector<std::int64_t> out;
    auto step = [&](const typename G::Elem& cur, const typename G::Elem& letter) {
        return side == Side::left ? g.canon(g.mul(cur, letter)) : g.canon(g.mul(letter, cur));
    };
    std::vector<std::int64_t> neg;
    auto cur = g.canon(base);
    for (std::int64_t n = 0; n <= w.n; ++n) {
        if (n > 0) cur = step(cur, x);
        if (!u.contains(cur)) out.push_back(n);
    }
    cur = g.canon(base);
    for (std::int64_t n = -1; n >= -w.n; --n) {
        cur = step(cur, xi);
        if (!u.contains(cur)) neg.push_back(n);
    }
    out.insert(out.begin(), neg.rbegin(), neg.rend());
    return out;
}

inline bool within_inner(const std::vector<std::int64_t>& exceptions, const Window& w) {
    for (std::int64_t n : exceptions)
        if (!w.inner_contains(n)) return false;
    return true;
}

struct ExceptionEntry {
    std::string element;
    std::string generator;
    Side side = Side::left;
    std::vector<std::int64_t> exceptions;
    bool confined = true;  // all exceptions inside the inner window
};

struct ProbeReport {
    std::string group;
    std::string subset;
    Window window;
    std::size_t sample_size = 0;
    std::size_t probed = 0;  // members of the sample that lie in U
    std::vector<ExceptionEntry> entries;
    bool vacuous = false;
    bool consistent = true;

    std::string verdict() const {
        if (vacuous) return "vacuous";
        return consistent ? "consistent-with-open" : "not-open-within-window";
    }
};

// Probes every sample point inside U along every generator, both sides. The
// verdict is deliberately window-relative: exceptions clear of the outer
// band are merely consistent with openness, never a proof of it.
template <GroupOracle G>
ProbeReport openness_probe(const G& g, const Subset<G>& u,
                           const std::vector<typename G::Elem>& sample,
                           const GeneratingSet<G>& s, const Window& w) {
    ProbeReport rep;
    rep.group = g.name();
    rep.subset = u.label;
    rep.window = w;
    rep.sample_size = sample.size();

    std::vector<typename G::Elem> probed;
    for (const auto& e : sample) {
        auto c = g.canon(e);
        if (u.contains(c)) probed.push_back(c);
    }
    rep.probed = probed.size();
    if (probed.empty()) {
        rep.vacuous = true;
        return rep;
    }

    const std::size_t per = s.gens.size() * 2;
    rep.entries.resize(probed.size() * per);
    parallel_for(rep.entries.size(), [&](std::size_t idx) {
        const std::size_t gi = idx / per;
        const std::size_t xi = (idx % per) / 2;
        const Side side = idx % 2 == 0 ? Side::left : Side::right;
        ExceptionEntry& e = rep.entries[idx];
        e.element = g.str(probed[gi]);
        e.generator = s.gens[xi].label;
        e.side = side;
        e.exceptions = coset_exception_set(g, u, probed[gi], s.gens[xi].elem, w, side);
        e.confined = within_inner(e.exceptions, w);
    });
    for (const auto& e : rep.entries)
        if (!e.confined) rep.consistent = false;
    return rep;
}

inline nlohmann::json to_json(const ProbeReport& rep) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& e : rep.entries)
        entries.push_back({{"element", e.element},
                           {"generator", e.generator},
                           {"side", side_name(e.side)},
                           {"exceptions", e.exceptions},
                           {"confined", e.confined}});
    return {{"group", rep.group},        {"subset", rep.subset}, {"window", to_json(rep.window)},
            {"sample_size", rep.sample_size}, {"probed", rep.probed}, {"verdict", rep.verdict()},
            {"entries", entries}};
}

// Closure of {seed} under g -> g x and g -> g x^-1 for every generator. With
// finite-order generators these memberships are forced for any open set, so
// a generating set of finite-order elements collapses the topology: the
// closure must be the whole (finite) group.
template <GroupOracle G>
std::set<typename G::Elem> finite_order_collapse(const G& g, const GeneratingSet<G>& s,
                                                 const typename G::Elem& seed) {
    if (!s.all_orders_finite())
        throw std::invalid_argument("collapse requires every generator order finite");
    std::set<typename G::Elem> seen{g.canon(seed)};
    std::vector<typename G::Elem> frontier{g.canon(seed)};
    while (!frontier.empty()) {
        std::vector<typename G::Elem> next;
        for (const auto& e : frontier) {
            for (const auto& gen : s.gens) {
                for (const auto& step : {g.canon(g.mul(e, gen.elem)),
                                         g.canon(g.mul(e, g.inv(gen.elem)))}) {
                    if (seen.insert(step).second) next.push_back(step);
                }
            }
        }
        frontier = std::move(next);
    }
    return seen;
}

// Transport identity x^n g = g (g^-1 x g)^n, plus closure membership of the
// conjugate when the set claims conjugation closure. Returns the first
// counterexample as text, or nothing.
template <GroupOracle G>
std::optional<std::string> conjugation_transport_check(const G& g, const GeneratingSet<G>& s,
                                                       const std::vector<typename G::Elem>& sample,
                                                       std::int64_t max_power) {
    for (const auto& raw : sample) {
        const auto h = g.canon(raw);
        for (const auto& gen : s.gens) {
            const auto conj = g.canon(g.mul(g.mul(g.inv(h), gen.elem), h));
            if (s.conjugation_closed && s.in_closure && !s.in_closure(g, conj))
                return "conjugate " + g.str(conj) + " of " + gen.label +
                       " escapes the closure predicate";
            for (std::int64_t n = -max_power; n <= max_power; ++n) {
                const auto lhs = g.canon(g.mul(grp::power(g, gen.elem, n), h));
                const auto rhs = g.canon(g.mul(h, grp::power(g, conj, n)));
                if (!(lhs == rhs))
                    return "transport identity fails at g = " + g.str(h) + ", x = " + gen.label +
                           ", n = " + std::to_string(n);
            }
        }
    }
    return std::nullopt;
}

template <GroupOracle G>
struct DecompLetter {
    typename G::Elem x;
    std::int64_t power = 0;
};

template <GroupOracle G>
struct WitnessResult {
    bool found = false;
    typename G::Elem witness;
    std::vector<std::string> trail;  // one line per eliminated letter
    std::string failure;             // set when !found
};

namespace detail {

// 0, 1, -1, 2, -2, ... up to |budget|.
inline std::vector<std::int64_t> budget_order(std::int64_t budget) {
    std::vector<std::int64_t> order{0};
    for (std::int64_t k = 1; k <= budget; ++k) {
        order.push_back(k);
        order.push_back(-k);
    }
    return order;
}

template <GroupOracle G>
typename G::Elem decomposition_product(const G& g, const typename G::Elem& base,
                                       const std::vector<DecompLetter<G>>& letters) {
    auto acc = base;
    for (const auto& l : letters) acc = g.mul(acc, grp::power(g, l.x, l.power));
    return g.canon(acc);
}

// Shared engine behind the two witness searches. Eliminates the last letter
// of h = g x1^{i1} ... xk^{ik} by finding n with h xk^n in V and g xk^{ik+n}
// in U, then conjugates the remaining letters by xk^{-(ik+n)} and recurses.
// require_v_side restricts candidate n to the V-side set T = {n : h xk^n in
// V} first, which is the search order the density argument dictates; the
// plain intersection search uses the same order, so the flag only changes
// the bookkeeping in the trail.
template <GroupOracle G>
WitnessResult<G> witness_engine(const G& g, const Subset<G>& u, const Subset<G>& v,
                                typename G::Elem ge, typename G::Elem he,
                                std::vector<DecompLetter<G>> letters, std::int64_t budget,
                                const GeneratingSet<G>& s) {
    WitnessResult<G> res;
    if (!u.contains(ge)) {
        res.failure = "g is not in U";
        return res;
    }
    if (!v.contains(he)) {
        res.failure = "h is not in V";
        return res;
    }
    if (!(decomposition_product(g, ge, letters) == he)) {
        res.failure = "decomposition does not multiply out to h";
        return res;
    }
    if (letters.size() > 1 && !s.conjugation_closed) {
        res.failure = "reduction of k >= 2 letters needs a conjugation-closed set";
        return res;
    }
    const auto order = budget_order(budget);
    while (!letters.empty()) {
        const auto letter = letters.back();
        letters.pop_back();
        std::optional<std::int64_t> chosen;
        for (std::int64_t n : order) {
            const auto hn = g.canon(g.mul(he, grp::power(g, letter.x, n)));
            if (!v.contains(hn)) continue;  // n must come from the V-side set
            const std::int64_t m = letter.power + n;
            const auto gm = g.canon(g.mul(ge, grp::power(g, letter.x, m)));
            if (!u.contains(gm)) continue;
            chosen = n;
            he = hn;
            ge = gm;
            const auto xm = grp::power(g, letter.x, m);
            const auto xmi = g.inv(xm);
            for (auto& rest : letters) {
                rest.x = g.canon(g.mul(g.mul(xmi, rest.x), xm));
                if (s.conjugation_closed && s.in_closure && !s.in_closure(g, rest.x)) {
                    res.failure = "conjugated letter escapes the closure predicate";
                    return res;
                }
            }
            res.trail.push_back("k=" + std::to_string(letters.size() + 1) +
                                ": n=" + std::to_string(n) + ", m=" + std::to_string(m));
            break;
        }
        if (!chosen) {
            res.failure = "exhausted";
            return res;
        }
    }
    if (!(ge == he)) throw std::logic_error("witness reduction lost the decomposition invariant");
    if (!u.contains(ge) || !v.contains(ge))
        throw std::logic_error("witness reduction produced a non-member");
    res.found = true;
    res.witness = ge;
    return res;
}

}  // namespace detail

// Point of U cap V reached by the inductive letter elimination. "exhausted"
// (found = false, failure = "exhausted") is a budget statement, not a
// disproof of intersection.
template <GroupOracle G>
WitnessResult<G> intersection_witness(const G& g, const Subset<G>& u, const Subset<G>& v,
                                      const typename G::Elem& ge, const typename G::Elem& he,
                                      const std::vector<DecompLetter<G>>& letters,
                                      std::int64_t budget, const GeneratingSet<G>& s) {
    return detail::witness_engine(g, u, v, g.canon(ge), g.canon(he), letters, budget, s);
}

// Same reduction driven from the V side, with an optional spot check of the
// hypothesis that V keeps meeting every twist orbit out to the window edge:
// for each letter x, {n in w : h x^n in V} must reach past the inner radius.
template <GroupOracle G>
WitnessResult<G> density_probe(const G& g, const Subset<G>& v, bool hypothesis_check,
                               const Subset<G>& u, const typename G::Elem& ge,
                               const typename G::Elem& he,
                               const std::vector<DecompLetter<G>>& letters, std::int64_t budget,
                               const GeneratingSet<G>& s, const Window& w) {
    if (hypothesis_check) {
        for (const auto& l : letters) {
            bool reaches_outer = false;
            auto cur = g.canon(he);
            for (std::int64_t n = 0; n <= w.n && !reaches_outer; ++n) {
                if (n > 0) cur = g.canon(g.mul(cur, l.x));
                if (n > w.inner_radius() && v.contains(cur)) reaches_outer = true;
            }
            cur = g.canon(he);
            const auto xi = g.inv(l.x);
            for (std::int64_t n = -1; n >= -w.n && !reaches_outer; --n) {
                cur = g.canon(g.mul(cur, xi));
                if (-n > w.inner_radius() && v.contains(cur)) reaches_outer = true;
            }
            if (!reaches_outer) {
                WitnessResult<G> res;
                res.failure = "density hypothesis fails within the window";
                return res;
            }
        }
    }
    return detail::witness_engine(g, u, v, g.canon(ge), g.canon(he), letters, budget, s);
}

struct PullbackReport {
    bool hom_ok = true;       // phi respected multiplication on all sampled pairs
    bool sets_match = true;   // exception sets agree on every probed coset
    std::string detail;       // first counterexample, if any
    std::size_t checked = 0;  // number of (g, x, side) comparisons
    bool ok() const { return hom_ok && sets_match; }
};

// Continuity surrogate: the exception set of the preimage of U_H along g x^n
// must equal the exception set of U_H along phi(g) phi(x)^n, exactly, within
// the window.
template <GroupOracle G, GroupOracle H, typename Phi>
PullbackReport morphism_pullback_check(const G& g, const H& h, Phi phi, const Subset<H>& uh,
                                       const std::vector<typename G::Elem>& bases,
                                       const std::vector<typename G::Elem>& gens, const Window& w) {
    PullbackReport rep;
    for (const auto& a : bases) {
        for (const auto& b : gens) {
            const auto lhs = h.canon(phi(g.canon(g.mul(a, b))));
            const auto rhs = h.canon(h.mul(phi(g.canon(a)), phi(g.canon(b))));
            if (!(lhs == rhs)) {
                rep.hom_ok = false;
                rep.detail = "phi(a b) != phi(a) phi(b) at a = " + g.str(a) + ", b = " + g.str(b);
                return rep;
            }
        }
    }
    Subset<G> pullback{"phi^-1(" + uh.label + ")", [&](const typename G::Elem& e) {
                           return uh.contains(h.canon(phi(e)));
                       }};
    for (const auto& a : bases) {
        for (const auto& x : gens) {
            for (Side side : {Side::left, Side::right}) {
                const auto upstairs = coset_exception_set(g, pullback, a, x, w, side);
                const auto downstairs =
                    coset_exception_set(h, uh, h.canon(phi(g.canon(a))), h.canon(phi(g.canon(x))),
                                        w, side);
                ++rep.checked;
                if (upstairs != downstairs) {
                    rep.sets_match = false;
                    rep.detail = "exception sets differ at g = " + g.str(a) + ", x = " + g.str(x) +
                                 ", side = " + side_name(side);
                    return rep;
                }
            }
        }
    }
    return rep;
}

}  // namespace topo
}  // namespace twistlab
