#include "refsev/severi.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

namespace refsev {

long grading_cap_for(const HTransversePolygon& p) {
    long cap = p.d_bottom();
    for (const auto& [v, m] : p.left().entries())
        if (v > 0) cap += static_cast<long>(v) * m;
    for (const auto& [v, m] : p.right().entries())
        if (v < 0) cap += static_cast<long>(-v) * m;
    return cap;
}

RationalLaurentY profile_matrix_element(const BasisVector& bra,
                                        const BasisVector& ket,
                                        const std::vector<int>& profile,
                                        long n_factors, long grading_cap,
                                        std::size_t max_states) {
    const long h = static_cast<long>(profile.size());
    if (n_factors < h) return RationalLaurentY();

    FockOps ops(grading_cap, max_states);
    // cur[j]: partial sums where j divergence factors have acted; since
    // factors act right to left, those are the last j of the word, with
    // values profile[h-j..h-1].
    std::vector<FockState> cur(static_cast<size_t>(h) + 1), next(cur.size());
    cur[0] = FockState::basis(ket);
    for (long n = 1; n <= n_factors; ++n) {
        for (long j = 0; j <= h; ++j) {
            // A branch that cannot consume the remaining divergences in the
            // remaining factor count is dead.
            if (h - j > n_factors - n + 1) {
                next[static_cast<size_t>(j)] = FockState();
                continue;
            }
            FockState s = ops.apply_b_diagonal(cur[static_cast<size_t>(j)]);
            if (j >= 1 && !cur[static_cast<size_t>(j) - 1].is_zero())
                s += ops.apply_divergence(cur[static_cast<size_t>(j) - 1],
                                          profile[static_cast<size_t>(h - j)]);
            next[static_cast<size_t>(j)] = std::move(s);
        }
        std::swap(cur, next);
    }
    return inner_product(FockState::basis(bra), cur[static_cast<size_t>(h)]);
}

namespace {

/// Multiplicity-weighted sum of profile matrix elements over all divergence
/// profiles of the polygon.  Work fans out across profiles; results are
/// collected by profile index, so the total does not depend on the thread
/// count.
RationalLaurentY sum_over_profiles(const HTransversePolygon& p,
                                   const BasisVector& bra,
                                   const BasisVector& ket, long n_factors,
                                   const ComputeOptions& opts) {
    const auto profiles = divergence_profiles(p.right(), p.left());
    const long cap = grading_cap_for(p);

    unsigned threads = opts.threads > 0
                           ? static_cast<unsigned>(opts.threads)
                           : std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(profiles.size()));

    std::vector<RationalLaurentY> results(profiles.size());
    if (threads <= 1) {
        for (std::size_t i = 0; i < profiles.size(); ++i)
            results[i] = profile_matrix_element(bra, ket, profiles[i].sequence,
                                                n_factors, cap, opts.max_states);
    } else {
        std::atomic<std::size_t> cursor{0};
        std::exception_ptr first_error;
        std::mutex error_mutex;
        auto worker = [&]() {
            try {
                for (;;) {
                    std::size_t i = cursor.fetch_add(1);
                    if (i >= profiles.size()) break;
                    results[i] =
                        profile_matrix_element(bra, ket, profiles[i].sequence,
                                               n_factors, cap, opts.max_states);
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        };
        std::vector<std::thread> pool;
        for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
        worker();
        for (auto& th : pool) th.join();
        if (first_error) std::rethrow_exception(first_error);
    }

    RationalLaurentY total;
    for (std::size_t i = 0; i < profiles.size(); ++i)
        total += results[i] * profiles[i].multiplicity;
    return total;
}

} // namespace

LaurentY refined_severi(const HTransversePolygon& p, long delta,
                        const ComputeOptions& opts) {
    if (delta < 0) throw DomainError("cogenus must be non-negative");
    const long n = p.dim_linear_system() - delta;
    if (n < 0) return LaurentY(0);
    BasisVector bra{Partition::single(1, p.d_top()), {}};
    BasisVector ket{Partition::single(1, p.d_bottom()), {}};
    return sum_over_profiles(p, bra, ket, n, opts).as_integral();
}

LaurentY refined_relative(const HTransversePolygon& p, long delta,
                          const Partition& alpha, const Partition& beta,
                          const ComputeOptions& opts) {
    if (delta < 0) throw DomainError("cogenus must be non-negative");
    if (alpha.weight() + beta.weight() != p.d_bottom())
        throw DomainError("tangency mismatch: weight(alpha)+weight(beta)=" +
                          std::to_string(alpha.weight() + beta.weight()) +
                          ", db=" + std::to_string(p.d_bottom()));
    const long n =
        p.dim_linear_system() - delta - p.d_bottom() + beta.length();
    if (n < 0) return LaurentY(0);
    BasisVector bra{Partition::single(1, p.d_top()), {}};
    BasisVector ket{beta, alpha};
    RationalLaurentY total = sum_over_profiles(p, bra, ket, n, opts);
    total = total * alpha.multiplicity_factorial();
    // Divide out one quantum integer [i] per contact of order i; the
    // quotient is exact for balanced tangency data.
    LaurentY contact_product(1);
    const int top = std::max(alpha.max_part(), beta.max_part());
    for (int i = 1; i <= top; ++i) {
        const long e = alpha.count(i) + beta.count(i);
        const LaurentY qi = quantum_integer(i);
        for (long k = 0; k < e; ++k) contact_product *= qi;
    }
    return divide_exact(total.as_integral(), contact_product);
}

BigInt severi_degree(const HTransversePolygon& p, long delta,
                     const ComputeOptions& opts) {
    return refined_severi(p, delta, opts).eval(EvalPoint::One).re;
}

BigInt welschinger_degree(const HTransversePolygon& p, long delta,
                          const ComputeOptions& opts) {
    GaussianInt v = refined_severi(p, delta, opts).eval(EvalPoint::MinusOne);
    if (v.im != 0)
        throw std::logic_error(
            "non-real value at y=-1 for an absolute count (internal bug)");
    return v.re;
}

bool grading_shortcut_check(const HTransversePolygon& p, long delta,
                            const ComputeOptions& opts) {
    const auto& r = p.right().entries();
    const auto& l = p.left().entries();
    const bool single_slope =
        (l.empty() || (l.size() == 1 && l.begin()->first == 0)) &&
        (r.empty() || (r.size() == 1 && r.begin()->first >= 1));
    if (!single_slope)
        throw DomainError("grading shortcut requires a single positive right "
                          "slope and vertical left edges");
    if (delta < 0) throw DomainError("cogenus must be non-negative");

    const long n = p.dim_linear_system() - delta;
    if (n < 0) return true;
    const LaurentY tracked = refined_severi(p, delta, opts);

    // Same operator power without divergence-count bookkeeping: all factor
    // words, any number of divergence blocks.  Grading alone must select
    // the same contribution.
    const int m = r.empty() ? 1 : r.begin()->first;
    FockOps ops(grading_cap_for(p), opts.max_states);
    FockState f = FockState::basis({Partition::single(1, p.d_bottom()), {}});
    for (long step = 0; step < n; ++step)
        f = ops.apply_b_diagonal(f) + ops.apply_divergence(f, m);
    RationalLaurentY untracked = inner_product(
        FockState::basis({Partition::single(1, p.d_top()), {}}), f);
    return untracked == RationalLaurentY(tracked);
}

std::vector<IrreducibleEntry> irreducible_degrees(const FamilySpec& fam,
                                                  long max_c, long max_d,
                                                  long max_delta,
                                                  const ComputeOptions& opts) {
    if (max_d < 0 || max_delta < 0) throw DomainError("negative table bound");
    if (!fam.two_parameter())
        max_c = 0;
    else if (max_c < 0)
        throw DomainError("negative table bound");

    long zmax = 0;
    for (long c = 0; c <= max_c; ++c)
        for (long d = 0; d <= max_d; ++d)
            zmax = std::max(zmax, fam.polygon(c, d).dim_linear_system());

    const bool two = fam.two_parameter();
    std::vector<long> orders =
        two ? std::vector<long>{max_c, max_d, zmax} : std::vector<long>{max_d, zmax};
    auto key = [&](long c, long d, long z) {
        return two ? std::vector<long>{c, d, z} : std::vector<long>{d, z};
    };

    // Generating series of the reducible counts: each class contributes its
    // full cogenus range, weighted by 1/(point count)!.
    GenSeries F = GenSeries::one(orders);
    for (long c = 0; c <= max_c; ++c) {
        for (long d = 0; d <= max_d; ++d) {
            if (c == 0 && d == 0) continue;
            const HTransversePolygon P = fam.polygon(c, d);
            const long e = P.dim_linear_system();
            for (long delta = 0; delta <= e; ++delta) {
                LaurentY val = refined_severi(P, delta, opts);
                if (val.is_zero()) continue;
                F.add(key(c, d, e - delta),
                      RationalLaurentY(val, factorial(e - delta)));
            }
        }
    }

    const GenSeries L = F.log();
    std::vector<IrreducibleEntry> rows;
    for (long c = 0; c <= max_c; ++c) {
        for (long d = two ? 0 : 1; d <= max_d; ++d) {
            if (c == 0 && d == 0) continue;
            const long e = fam.polygon(c, d).dim_linear_system();
            for (long delta = 0; delta <= std::min(max_delta, e); ++delta) {
                RationalLaurentY v =
                    L.coeff(key(c, d, e - delta)) * factorial(e - delta);
                rows.push_back({c, d, delta, v.as_integral()});
            }
        }
    }
    return rows;
}

GenfunReport genfun_verify(const FamilySpec& fam, const GenfunOrders& orders,
                           const ComputeOptions& opts) {
    if (orders.q < 0 || orders.t < 0 || orders.s < 0)
        throw DomainError("negative truncation order");
    if (!fam.two_parameter() && orders.s != 0)
        throw DomainError("family " + fam.str() + " takes no s order");

    GenfunReport rep;
    auto check = [&](const std::string& where, const RationalLaurentY& expected,
                     const RationalLaurentY& got) {
        ++rep.coefficients_checked;
        if (rep.ok && !(got == expected)) {
            rep.ok = false;
            rep.first_mismatch =
                where + ": expected " + expected.str() + ", got " + got.str();
        }
    };

    if (fam.kind == FamilySpec::Kind::WPS1MM) {
        // Vacuum expectation of the exponential of the three-block operator;
        // the two divergence values are tracked separately and the
        // grading-raising count must collapse onto (m-1) * t.
        const long m = fam.m;
        const long scap = (m - 1) * orders.t;
        FockOps ops(scap, opts.max_states);
        std::map<std::pair<long, long>, FockState> cur;
        cur[{0, 0}] = FockState::vacuum();
        for (long n = 0; n <= orders.q; ++n) {
            if (n > 0) {
                std::map<std::pair<long, long>, FockState> next;
                auto accumulate = [&](std::pair<long, long> k, FockState s) {
                    if (s.is_zero()) return;
                    auto it = next.find(k);
                    if (it == next.end())
                        next.emplace(k, std::move(s));
                    else
                        it->second += s;
                };
                for (const auto& [k, st] : cur) {
                    const auto [sd, td] = k;
                    accumulate({sd, td}, ops.apply_b_diagonal(st));
                    if (sd + 1 <= scap)
                        accumulate({sd + 1, td}, ops.apply_divergence(st, -1));
                    if (td + 1 <= orders.t)
                        accumulate({sd, td + 1},
                                   ops.apply_divergence(st, static_cast<int>(m - 1)));
                }
                cur = std::move(next);
            }
            for (long d = 0; d <= orders.t; ++d) {
                for (long sd = 0; sd <= scap; ++sd) {
                    auto it = cur.find({sd, d});
                    RationalLaurentY val =
                        it == cur.end()
                            ? RationalLaurentY()
                            : inner_product(FockState::vacuum(), it->second);
                    std::ostringstream where;
                    where << fam.str() << " (s-count=" << sd << ", t^" << d
                          << ", q^" << n << ")";
                    if (sd != (m - 1) * d) {
                        check(where.str() + " [collapse]", RationalLaurentY(), val);
                        continue;
                    }
                    const HTransversePolygon P = presets::wps1mm(m, d);
                    const long delta = P.dim_linear_system() - n;
                    RationalLaurentY expected =
                        delta >= 0
                            ? RationalLaurentY(refined_severi(P, delta, opts))
                            : RationalLaurentY();
                    check(where.str(), expected, val);
                }
            }
        }
        return rep;
    }

    // One-divergence-value families; the bottom boundary enters through a
    // truncated coherent state and the top boundary through the bra index c.
    const long m = fam.kind == FamilySpec::Kind::P2 ? 1 : fam.m;
    const long smax = fam.two_parameter() ? orders.s : 0;
    const long kcap = smax + orders.t * m;
    FockOps ops(kcap, opts.max_states);
    std::vector<FockState> cur(static_cast<size_t>(orders.t) + 1);
    FockState start;
    for (long k = 0; k <= kcap; ++k)
        start.add({Partition::single(1, k), {}}, RationalLaurentY(1));
    cur[0] = start;
    for (long n = 0; n <= orders.q; ++n) {
        if (n > 0) {
            std::vector<FockState> next(cur.size());
            for (long d = orders.t; d >= 0; --d) {
                FockState s = ops.apply_b_diagonal(cur[static_cast<size_t>(d)]);
                if (d >= 1)
                    s += ops.apply_divergence(cur[static_cast<size_t>(d) - 1],
                                              static_cast<int>(m));
                next[static_cast<size_t>(d)] = std::move(s);
            }
            cur = std::move(next);
        }
        for (long c = 0; c <= smax; ++c) {
            for (long d = 0; d <= orders.t; ++d) {
                RationalLaurentY val = inner_product(
                    FockState::basis({Partition::single(1, c), {}}),
                    cur[static_cast<size_t>(d)]);
                const HTransversePolygon P = presets::sigma(m, c, d);
                const long delta = P.dim_linear_system() - n;
                RationalLaurentY expected =
                    delta >= 0 ? RationalLaurentY(refined_severi(P, delta, opts))
                               : RationalLaurentY();
                std::ostringstream where;
                where << fam.str() << " (";
                if (fam.two_parameter()) where << "s^" << c << ", ";
                where << "t^" << d << ", q^" << n << ")";
                check(where.str(), expected, val);
            }
        }
    }
    return rep;
}

} // namespace refsev
