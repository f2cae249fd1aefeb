#include "refsev/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace refsev {

long FloorDiagram::slope_step(int j) const {
    return static_cast<long>(right_seq.at(static_cast<size_t>(j) - 1)) -
           static_cast<long>(left_seq.at(static_cast<size_t>(j) - 1));
}

long FloorDiagram::vertex_divergence(int j) const {
    long div = 0;
    for (const auto& e : edges) {
        if (e.from == j) div += e.weight;
        if (e.to == j) div -= e.weight;
    }
    return div;
}

long FloorDiagram::sink_count(int j) const {
    return slope_step(j) + sources.at(static_cast<size_t>(j) - 1) -
           vertex_divergence(j);
}

std::string FloorDiagram::str() const {
    std::ostringstream os;
    auto seq = [&](const auto& v) {
        os << "(";
        for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
        os << ")";
    };
    os << "R=";
    seq(right_seq);
    os << " L=";
    seq(left_seq);
    os << " s=";
    seq(sources);
    os << " E={";
    for (size_t i = 0; i < edges.size(); ++i) {
        if (i) os << ",";
        os << edges[i].from << "->" << edges[i].to << ":" << edges[i].weight;
    }
    os << "}";
    if (through > 0) os << " T=" << through;
    return os.str();
}

namespace {

/// Enumerate weighted edge multisets in nondecreasing (from,to,weight)
/// order, respecting the residual capacity of every cut between adjacent
/// floors, and hand complete candidates to sink.
void enumerate_edges(long h, long remaining, const std::vector<long>& cut_cap,
                     std::vector<long>& crossing, FloorEdge min_edge,
                     std::vector<FloorEdge>& edges,
                     const std::function<void()>& sink) {
    if (remaining == 0) {
        sink();
        return;
    }
    for (int i = min_edge.from; i <= static_cast<int>(h) - 1; ++i) {
        const int j0 = (i == min_edge.from) ? min_edge.to : i + 1;
        for (int j = j0; j <= static_cast<int>(h); ++j) {
            // residual capacity over the cuts this edge crosses
            long bound = -1;
            for (int c = i; c <= j - 1; ++c) {
                long res = cut_cap[static_cast<size_t>(c) - 1] -
                           crossing[static_cast<size_t>(c) - 1];
                bound = bound < 0 ? res : std::min(bound, res);
            }
            const long w0 =
                (i == min_edge.from && j == min_edge.to) ? min_edge.weight : 1;
            for (long w = w0; w <= bound; ++w) {
                edges.push_back({i, j, w});
                for (int c = i; c <= j - 1; ++c)
                    crossing[static_cast<size_t>(c) - 1] += w;
                enumerate_edges(h, remaining - 1, cut_cap, crossing,
                                {i, j, w}, edges, sink);
                for (int c = i; c <= j - 1; ++c)
                    crossing[static_cast<size_t>(c) - 1] -= w;
                edges.pop_back();
            }
        }
    }
}

} // namespace

std::vector<FloorDiagram> enumerate_floor_diagrams(const HTransversePolygon& p,
                                                   long delta) {
    if (delta < 0) throw DomainError("cogenus must be non-negative");
    const long h = p.height();

    std::vector<FloorDiagram> out;
    // Base edge budget; each through elevator frees one extra edge mark.
    const long edge_budget =
        p.dim_linear_system() - delta - h - p.d_top() - p.d_bottom();

    for (const auto& R : p.right().orderings()) {
        for (const auto& L : p.left().orderings()) {
            std::vector<long> step(static_cast<size_t>(h));
            for (long j = 0; j < h; ++j)
                step[static_cast<size_t>(j)] =
                    static_cast<long>(R[static_cast<size_t>(j)]) -
                    static_cast<long>(L[static_cast<size_t>(j)]);

            for (long th = 0; th <= std::min(p.d_top(), p.d_bottom()); ++th) {
                const long edge_count = edge_budget + th;
                if (edge_count < 0) continue;

                // compositions of the non-elevator top units into h source
                // multiplicities
                std::vector<long> s(static_cast<size_t>(h), 0);
                std::function<void(long, long)> compose = [&](long j,
                                                              long left) {
                    if (j == h) {
                        if (left != 0) return; // only possible when h == 0
                        // capacity of the cut below floor k: sum of step + s
                        // above it; negative capacity admits nothing.
                        std::vector<long> cut_cap(
                            static_cast<size_t>(std::max<long>(h - 1, 0)));
                        long acc = 0;
                        for (long k = 1; k <= h - 1; ++k) {
                            acc += step[static_cast<size_t>(k) - 1] +
                                   s[static_cast<size_t>(k) - 1];
                            if (acc < 0) return;
                            cut_cap[static_cast<size_t>(k) - 1] = acc;
                        }
                        std::vector<long> crossing(cut_cap.size(), 0);
                        std::vector<FloorEdge> edges;
                        auto sink = [&]() {
                            FloorDiagram d{R, L, s, edges, th};
                            for (int v = 1; v <= h; ++v)
                                if (d.vertex_divergence(v) >
                                    d.slope_step(v) +
                                        s[static_cast<size_t>(v) - 1])
                                    return;
                            out.push_back(d);
                        };
                        enumerate_edges(h, edge_count, cut_cap, crossing,
                                        {1, 2, 1}, edges, sink);
                        return;
                    }
                    const bool last = (j == h - 1);
                    for (long v = last ? left : 0; v <= left; ++v) {
                        s[static_cast<size_t>(j)] = v;
                        compose(j + 1, left - v);
                        if (last) break;
                    }
                    s[static_cast<size_t>(j)] = 0;
                };
                compose(0, p.d_top() - th);
            }
        }
    }
    return out;
}

namespace {

/// Group of indistinguishable black vertices that may sit in any gap of the
/// white chain between first_gap and last_gap inclusive (gap g lies after
/// white g and before white g+1).
struct GapGroup {
    int first_gap;
    int last_gap;
    long size;
};

/// Number of distinct linear orders: distribute every group over its gap
/// window; within one gap the arrangements count multinomially.
BigInt count_gap_distributions(const std::vector<GapGroup>& groups,
                               int num_gaps) {
    std::vector<long> remaining(groups.size());
    for (size_t i = 0; i < groups.size(); ++i) remaining[i] = groups[i].size;

    std::function<BigInt(int)> over_gaps = [&](int gap) -> BigInt {
        if (gap == num_gaps) return 1;
        std::vector<size_t> active;
        for (size_t i = 0; i < groups.size(); ++i)
            if (groups[i].first_gap <= gap && gap <= groups[i].last_gap &&
                remaining[i] > 0)
                active.push_back(i);

        BigInt total = 0;
        std::vector<long> take(active.size(), 0);
        std::function<void(size_t, long, BigInt)> choose =
            [&](size_t idx, long placed, BigInt denom) {
                if (idx == active.size()) {
                    total += factorial(placed) / denom * over_gaps(gap + 1);
                    return;
                }
                const size_t gi = active[idx];
                // everything left in a group must land in its last gap
                const long lo =
                    groups[gi].last_gap == gap ? remaining[gi] : 0;
                for (long x = lo; x <= remaining[gi]; ++x) {
                    remaining[gi] -= x;
                    choose(idx + 1, placed + x, denom * factorial(x));
                    remaining[gi] += x;
                }
            };
        choose(0, 0, 1);
        return total;
    };
    return over_gaps(0);
}

std::vector<GapGroup> absolute_groups(const FloorDiagram& d) {
    const int h = static_cast<int>(d.height());
    std::vector<GapGroup> groups;
    if (d.through > 0) groups.push_back({0, h, d.through});
    for (int j = 1; j <= h; ++j) {
        const long src = d.sources[static_cast<size_t>(j) - 1];
        if (src > 0) groups.push_back({0, j - 1, src});
        const long snk = d.sink_count(j);
        if (snk < 0) throw DomainError("invalid diagram: negative sink count");
        if (snk > 0) groups.push_back({j, h, snk});
    }
    for (size_t i = 0; i < d.edges.size();) {
        size_t j = i;
        while (j < d.edges.size() && d.edges[j] == d.edges[i]) ++j;
        groups.push_back({d.edges[i].from, d.edges[i].to - 1,
                          static_cast<long>(j - i)});
        i = j;
    }
    return groups;
}

} // namespace

BigInt count_markings(const FloorDiagram& d) {
    return count_gap_distributions(absolute_groups(d),
                                   static_cast<int>(d.height()) + 1);
}

BigInt count_markings_bruteforce(const FloorDiagram& d) {
    const auto groups = absolute_groups(d);
    const int h = static_cast<int>(d.height());
    std::vector<long> remaining(groups.size());
    for (size_t i = 0; i < groups.size(); ++i) remaining[i] = groups[i].size;

    std::map<std::pair<int, std::vector<long>>, BigInt> memo;
    std::function<BigInt(int)> rec = [&](int whites_placed) -> BigInt {
        auto key = std::make_pair(whites_placed, remaining);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        BigInt total = 0;
        bool done = whites_placed == h;
        bool white_ok = whites_placed < h;
        for (size_t i = 0; i < groups.size(); ++i) {
            if (remaining[i] == 0) continue;
            done = false;
            if (groups[i].last_gap == whites_placed) white_ok = false;
        }
        if (done) return memo[key] = 1;
        if (white_ok) total += rec(whites_placed + 1);
        for (size_t i = 0; i < groups.size(); ++i) {
            if (remaining[i] == 0 || groups[i].first_gap > whites_placed ||
                whites_placed > groups[i].last_gap)
                continue;
            remaining[i] -= 1;
            total += rec(whites_placed);
            remaining[i] += 1;
        }
        return memo[key] = total;
    };
    return rec(0);
}

LaurentY diagram_multiplicity(const FloorDiagram& d) {
    LaurentY m(1);
    for (const auto& e : d.edges) {
        const LaurentY q = quantum_integer(e.weight);
        m *= q;
        m *= q;
    }
    return m;
}

LaurentY floor_severi(const HTransversePolygon& p, long delta) {
    LaurentY total(0);
    for (const auto& d : enumerate_floor_diagrams(p, delta))
        total += diagram_multiplicity(d) * count_markings(d);
    return total;
}

namespace {

/// Enumerate sub-partitions of bound with prescribed weight.
void subpartitions_of_weight(const Partition& bound, long weight,
                             const std::function<void(const Partition&)>& f) {
    if (weight < 0) return;
    std::vector<long> counts(static_cast<size_t>(bound.max_part()), 0);
    std::function<void(int, long)> rec = [&](int part, long left) {
        if (part > bound.max_part()) {
            if (left == 0) f(Partition::from_counts(counts));
            return;
        }
        const long cap = bound.count(part);
        for (long take = 0; take <= cap && take * part <= left; ++take) {
            counts[static_cast<size_t>(part) - 1] = take;
            rec(part + 1, left - take * part);
        }
        counts[static_cast<size_t>(part) - 1] = 0;
    };
    rec(1, weight);
}

Partition subtract(const Partition& a, const Partition& b) {
    Partition r = a;
    for (int i = 1; i <= b.max_part(); ++i)
        if (b.count(i)) r = r.with_part(i, -b.count(i));
    return r;
}

} // namespace

LaurentY floor_relative(const HTransversePolygon& p, long delta,
                        const Partition& alpha, const Partition& beta) {
    if (alpha.weight() + beta.weight() != p.d_bottom())
        throw DomainError("tangency mismatch: weight(alpha)+weight(beta)=" +
                          std::to_string(alpha.weight() + beta.weight()) +
                          ", db=" + std::to_string(p.d_bottom()));
    LaurentY total(0);
    for (const auto& d : enumerate_floor_diagrams(p, delta)) {
        const int h = static_cast<int>(d.height());

        // Shared groups: sources and edge subdivisions.
        std::vector<GapGroup> base;
        for (int j = 1; j <= h; ++j) {
            const long src = d.sources[static_cast<size_t>(j) - 1];
            if (src > 0) base.push_back({0, j - 1, src});
            if (d.sink_count(j) < 0)
                throw DomainError("invalid diagram: negative sink count");
        }
        for (size_t i = 0; i < d.edges.size();) {
            size_t j = i;
            while (j < d.edges.size() && d.edges[j] == d.edges[i]) ++j;
            base.push_back({d.edges[i].from, d.edges[i].to - 1,
                            static_cast<long>(j - i)});
            i = j;
        }

        LaurentY edge_mult = diagram_multiplicity(d);
        LaurentY contact_mult(1);
        for (int i = 1; i <= beta.max_part(); ++i) {
            const LaurentY qi = quantum_integer(i);
            for (long k = 0; k < beta.count(i); ++k) contact_mult *= qi;
        }

        // Split the through elevators: a marked one consumes a weight-1 part
        // of beta, an unmarked direct connection consumes a weight-1 part of
        // alpha (its interchanges are indistinct, hence the 1/tu! below).
        for (long tu = 0; tu <= std::min<long>(d.through, alpha.count(1));
             ++tu) {
            const long tm = d.through - tu;
            if (tm > beta.count(1)) continue;
            const Partition alpha_rem =
                tu ? alpha.with_part(1, -tu) : alpha;
            const Partition beta_rem = tm ? beta.with_part(1, -tm) : beta;
            std::vector<GapGroup> split_base = base;
            if (tm > 0)
                split_base.push_back({0, h, tm});

            // Distribute the remaining contact orders over the floors:
            // floor j absorbs sub-partitions (alpha_j, beta_j) of combined
            // weight sink_count(j).
            std::vector<std::pair<Partition, Partition>> chosen(
                static_cast<size_t>(h));
            std::function<void(int, const Partition&, const Partition&)>
                assign = [&](int j, const Partition& rem_a,
                             const Partition& rem_b) {
                    if (j > h) {
                        if (!rem_a.empty() || !rem_b.empty()) return;
                        std::vector<GapGroup> groups = split_base;
                        BigInt tail_arrangements = 1;
                        for (int i = 1; i <= alpha.max_part(); ++i) {
                            BigInt ways = factorial(alpha.count(i));
                            if (i == 1) ways /= factorial(tu);
                            for (int v = 1; v <= h; ++v)
                                ways /= factorial(
                                    chosen[static_cast<size_t>(v) - 1]
                                        .first.count(i));
                            tail_arrangements *= ways;
                        }
                        for (int v = 1; v <= h; ++v) {
                            const Partition& bv =
                                chosen[static_cast<size_t>(v) - 1].second;
                            for (int i = 1; i <= bv.max_part(); ++i)
                                if (bv.count(i) > 0)
                                    groups.push_back({v, h, bv.count(i)});
                        }
                        const BigInt nu =
                            count_gap_distributions(groups, h + 1) *
                            tail_arrangements;
                        total += edge_mult * contact_mult * nu;
                        return;
                    }
                    const long capacity = d.sink_count(j);
                    for (long wa = 0; wa <= capacity; ++wa) {
                        subpartitions_of_weight(
                            rem_a, wa, [&](const Partition& aj) {
                                subpartitions_of_weight(
                                    rem_b, capacity - wa,
                                    [&](const Partition& bj) {
                                        chosen[static_cast<size_t>(j) - 1] = {
                                            aj, bj};
                                        assign(j + 1, subtract(rem_a, aj),
                                               subtract(rem_b, bj));
                                    });
                            });
                    }
                    chosen[static_cast<size_t>(j) - 1] = {};
                };
            assign(1, alpha_rem, beta_rem);
        }
    }
    return total;
}

// ---------------------------------------------------------------------------
// Pairing oracle
// ---------------------------------------------------------------------------

WickFactor WickFactor::divergence(Partition mu, Partition nu) {
    WickFactor f;
    f.kind = Kind::Divergence;
    f.mu = std::move(mu);
    f.nu = std::move(nu);
    return f;
}

WickFactor WickFactor::b_diagonal(int k) {
    if (k <= 0) throw DomainError("b-diagonal index must be positive");
    WickFactor f;
    f.kind = Kind::BDiagonal;
    f.k = k;
    return f;
}

WickFactor WickFactor::b_creation(int k) {
    if (k <= 0) throw DomainError("b-creation index must be positive");
    WickFactor f;
    f.kind = Kind::BCreation;
    f.k = k;
    return f;
}

WickFactor WickFactor::a_creation(Partition beta) {
    return divergence(std::move(beta), {});
}

WickFactor WickFactor::a_annihilation(Partition nu) {
    return divergence({}, std::move(nu));
}

RationalLaurentY wick_vev(const std::vector<WickFactor>& word) {
    struct Gen {
        bool is_a;
        int index;
    };
    std::vector<Gen> gens;
    BigInt norm = 1;
    for (const auto& f : word) {
        switch (f.kind) {
            case WickFactor::Kind::Divergence:
                for (int i = 1; i <= f.mu.max_part(); ++i)
                    for (long c = 0; c < f.mu.count(i); ++c)
                        gens.push_back({true, -i});
                for (int i = 1; i <= f.nu.max_part(); ++i)
                    for (long c = 0; c < f.nu.count(i); ++c)
                        gens.push_back({true, i});
                norm *= f.mu.multiplicity_factorial();
                norm *= f.nu.multiplicity_factorial();
                break;
            case WickFactor::Kind::BDiagonal:
                gens.push_back({false, -f.k});
                gens.push_back({false, f.k});
                break;
            case WickFactor::Kind::BCreation:
                gens.push_back({false, -f.k});
                break;
        }
    }
    if (gens.size() % 2 != 0) return RationalLaurentY();

    std::vector<bool> used(gens.size(), false);
    // Leftmost unpaired generator must annihilate; sum over the later
    // opposite-kind creators it can pair with.
    std::function<LaurentY(size_t)> rec = [&](size_t from) -> LaurentY {
        size_t i = from;
        while (i < gens.size() && used[i]) ++i;
        if (i == gens.size()) return LaurentY(1);
        if (gens[i].index < 0) return LaurentY(0);
        used[i] = true;
        LaurentY sum(0);
        for (size_t j = i + 1; j < gens.size(); ++j) {
            if (used[j] || gens[j].is_a == gens[i].is_a ||
                gens[j].index != -gens[i].index)
                continue;
            used[j] = true;
            sum += rec(i + 1);
            used[j] = false;
        }
        used[i] = false;
        return quantum_integer(gens[i].index) * sum;
    };
    return RationalLaurentY(rec(0), norm);
}

namespace {

std::vector<WickFactor> divergence_options(int value, long cap) {
    std::vector<WickFactor> out;
    for (long nw = 0; nw <= cap; ++nw) {
        const long mw = nw - value;
        if (mw < 0 || mw > cap) continue;
        for (const auto& nu : partitions_of(nw))
            for (const auto& mu : partitions_of(mw))
                out.push_back(WickFactor::divergence(mu, nu));
    }
    return out;
}

LaurentY wick_count(const HTransversePolygon& p, long delta,
                    const Partition& alpha, const Partition& beta,
                    const ComputeOptions& opts) {
    if (delta < 0) throw DomainError("cogenus must be non-negative");
    if (alpha.weight() + beta.weight() != p.d_bottom())
        throw DomainError("tangency mismatch: weight(alpha)+weight(beta)=" +
                          std::to_string(alpha.weight() + beta.weight()) +
                          ", db=" + std::to_string(p.d_bottom()));

    const long n_factors =
        p.dim_linear_system() - delta - p.d_bottom() + beta.length();
    if (n_factors < 0) return LaurentY(0);
    if (n_factors > opts.wick_max_factors)
        throw GuardError("pairing oracle guard: " + std::to_string(n_factors) +
                         " interleaved factors exceed the limit of " +
                         std::to_string(opts.wick_max_factors));

    const long cap = grading_cap_for(p);
    const long h = p.height();

    std::vector<WickFactor> head;
    if (p.d_top() > 0)
        head.push_back(
            WickFactor::a_annihilation(Partition::single(1, p.d_top())));
    std::vector<WickFactor> tail;
    if (!beta.empty()) tail.push_back(WickFactor::a_creation(beta));
    for (int i = 1; i <= alpha.max_part(); ++i)
        for (long c = 0; c < alpha.count(i); ++c)
            tail.push_back(WickFactor::b_creation(i));

    std::map<int, std::vector<WickFactor>> options;

    RationalLaurentY total;
    for (const auto& prof : divergence_profiles(p.right(), p.left())) {
        for (int v : prof.sequence)
            if (!options.count(v)) options[v] = divergence_options(v, cap);

        RationalLaurentY profile_sum;
        std::vector<WickFactor> word = head;
        std::function<void(long, long)> build = [&](long slot, long placed) {
            if (slot == n_factors) {
                if (placed != h) return;
                for (const auto& f : tail) word.push_back(f);
                profile_sum += wick_vev(word);
                word.resize(word.size() - tail.size());
                return;
            }
            // b-diagonal factor, unless every remaining slot must divergence
            if (n_factors - slot > h - placed) {
                for (long k = 1; k <= cap; ++k) {
                    word.push_back(WickFactor::b_diagonal(static_cast<int>(k)));
                    build(slot + 1, placed);
                    word.pop_back();
                }
            }
            if (placed < h) {
                for (const auto& f :
                     options[prof.sequence[static_cast<size_t>(placed)]]) {
                    word.push_back(f);
                    build(slot + 1, placed + 1);
                    word.pop_back();
                }
            }
        };
        build(0, 0);
        total += profile_sum * prof.multiplicity;
    }

    LaurentY contact_product(1);
    const int top = std::max(alpha.max_part(), beta.max_part());
    for (int i = 1; i <= top; ++i) {
        const long e = alpha.count(i) + beta.count(i);
        const LaurentY qi = quantum_integer(i);
        for (long k = 0; k < e; ++k) contact_product *= qi;
    }
    return divide_exact(total.as_integral(), contact_product);
}

} // namespace

LaurentY wick_severi(const HTransversePolygon& p, long delta,
                     const ComputeOptions& opts) {
    return wick_count(p, delta, {}, Partition::single(1, p.d_bottom()), opts);
}

LaurentY wick_relative(const HTransversePolygon& p, long delta,
                       const Partition& alpha, const Partition& beta,
                       const ComputeOptions& opts) {
    return wick_count(p, delta, alpha, beta, opts);
}

} // namespace refsev
