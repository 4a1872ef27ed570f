// Copyright 2026 The sqgame authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sqgame/optimize.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <optional>
#include <thread>

#include <Eigen/Eigenvalues>

#include "sqgame/rng.hpp"

namespace sqgame {

namespace {

// Working arrangement for the optimizers: the joint operator
// W^Theta (x) rho re-indexed to [A, A0, B0, B], so that Alice's joint index
// comes first and Bob's second. Effects P (on A,A0) and Q (on B0,B) then
// contract without any per-iteration permutation.
struct Arena {
    Matrix g;
    Index d_alice = 0; // d_A * d_A0
    Index d_bob = 0;   // d_B0 * d_B
    Index da = 0, da0 = 0, db0 = 0, db = 0;
};

Arena make_arena(const Witness& w, const QuantumOperator& rho) {
    if (rho.layout().size() != 2 || !rho.layout().has(labels::a) || !rho.layout().has(labels::b))
        throw LayoutError("optimize: shared state must live on [A, B]");
    if (!is_state(rho))
        throw ValidationError("optimize: shared state is not a density operator");
    Arena arena;
    arena.da = rho.layout().dim_of(labels::a);
    arena.db = rho.layout().dim_of(labels::b);
    arena.da0 = w.dim_a0();
    arena.db0 = w.dim_b0();
    arena.d_alice = arena.da * arena.da0;
    arena.d_bob = arena.db0 * arena.db;
    const QuantumOperator theta(w.op.layout(), witness_theta(w));
    arena.g = permute_subsystems(tensor(theta, rho),
                                 {labels::a, labels::a0, labels::b0, labels::b})
                  .matrix();
    return arena;
}

// Operator on Bob's side with Tr[(P (x) Q) G] = Tr[Q M] for every Q.
Matrix conditioned_on_alice(const Arena& arena, const Matrix& p) {
    const Index na = arena.d_alice, nb = arena.d_bob, n = arena.g.rows();
    Matrix out(nb, nb);
    const Matrix pt = p.transpose();
    using StrideT = Eigen::Stride<Eigen::Dynamic, Eigen::Dynamic>;
    for (Index br = 0; br < nb; ++br)
        for (Index bc = 0; bc < nb; ++bc) {
            Eigen::Map<const Matrix, 0, StrideT> sub(arena.g.data() + br + bc * n, na, na,
                                                     StrideT(nb * n, nb));
            out(br, bc) = sub.cwiseProduct(pt).sum();
        }
    return out;
}

// Operator on Alice's side with Tr[(P (x) Q) G] = Tr[P M] for every P.
Matrix conditioned_on_bob(const Arena& arena, const Matrix& q) {
    const Index na = arena.d_alice, nb = arena.d_bob;
    Matrix out(na, na);
    const Matrix qt = q.transpose();
    for (Index ar = 0; ar < na; ++ar)
        for (Index ac = 0; ac < na; ++ac)
            out(ar, ac) =
                arena.g.block(ar * nb, ac * nb, nb, nb).cwiseProduct(qt).sum();
    return out;
}

double trace_product(const Matrix& effect, const Matrix& conditioned) {
    return conditioned.cwiseProduct(effect.transpose()).sum().real();
}

Matrix hermitize(const Matrix& m) { return 0.5 * (m + m.adjoint()); }

double min_eigenvalue(const Matrix& h) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(hermitize(h), Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

// Deterministic restart scheduler: results land in a pre-sized vector, so the
// merge below is independent of thread interleaving.
template <typename Fn>
void for_each_restart(int restarts, int threads, Fn&& body) {
    if (threads <= 1) {
        for (int r = 0; r < restarts; ++r) body(r);
        return;
    }
    std::atomic<int> next{0};
    const int workers = std::min(threads, restarts);
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (int t = 0; t < workers; ++t)
        pool.emplace_back([&] {
            for (int r = next.fetch_add(1); r < restarts; r = next.fetch_add(1)) body(r);
        });
    for (auto& th : pool) th.join();
}

struct RestartOutcome {
    double objective = -std::numeric_limits<double>::infinity();
    int iterations = 0;
    bool converged = false;
    std::vector<double> trace;
    Matrix p_effect, q_effect;                   // product family
    std::vector<Matrix> povm, conditional;       // matched family
};

int pick_best(const std::vector<RestartOutcome>& outcomes) {
    int best = 0;
    for (int r = 1; r < static_cast<int>(outcomes.size()); ++r)
        if (outcomes[static_cast<size_t>(r)].objective >
            outcomes[static_cast<size_t>(best)].objective)
            best = r;
    return best;
}

void validate_options(const SeesawOptions& opts) {
    if (opts.restarts < 1 || opts.max_iter < 1 || opts.tol <= 0.0)
        throw ValidationError("seesaw: restarts and max_iter must be positive, tol > 0");
}

PayoffReport finalize(const Witness& w, const QuantumOperator& rho, Strategy strategy,
                      const RestartOutcome& best, const SeesawOptions& opts) {
    PayoffReport report{0.0, std::move(strategy), upper_bound_global(w, rho),
                        best.iterations, opts.restarts, best.converged,
                        opts.seed, best.trace, ""};
    report.value = payoff_via_witness(w, rho, report.strategy);
    return report;
}

} // namespace

double upper_bound_global(const Witness& w, const QuantumOperator& rho) {
    // Spectrum of W^Theta (x) rho = products of the individual spectra
    // (transposition preserves the spectrum of W).
    const Eigensystem ew = eig_hermitian(w.op);
    const Eigensystem er = eig_hermitian(rho);
    double bound = 0.0;
    for (Index i = 0; i < ew.values.size(); ++i)
        for (Index j = 0; j < er.values.size(); ++j) {
            const double prod = ew.values(i) * er.values(j);
            if (prod > 0.0) bound += prod;
        }
    return bound;
}

PayoffReport seesaw_product(const Witness& w, const QuantumOperator& rho,
                            const SeesawOptions& opts) {
    validate_options(opts);
    const Arena arena = make_arena(w, rho);

    std::vector<RestartOutcome> outcomes(static_cast<size_t>(opts.restarts));
    for_each_restart(opts.restarts, opts.threads, [&](int r) {
        RngStream rng = derive_stream(opts.seed, static_cast<std::uint64_t>(r));
        RestartOutcome out;
        Matrix p = rng.haar_projector(arena.d_alice);
        Matrix q = rng.haar_projector(arena.d_bob);
        double objective = trace_product(q, conditioned_on_alice(arena, p));
        out.trace.push_back(objective);
        for (int it = 1; it <= opts.max_iter; ++it) {
            p = positive_part(hermitize(conditioned_on_bob(arena, q))).projector;
            const PositivePart step = positive_part(hermitize(conditioned_on_alice(arena, p)));
            q = step.projector;
            const double next = step.weight;
            out.trace.push_back(next);
            out.iterations = it;
            if (next - objective < opts.tol) {
                objective = std::max(objective, next);
                out.converged = true;
                break;
            }
            objective = next;
        }
        out.objective = objective;
        out.p_effect = std::move(p);
        out.q_effect = std::move(q);
        outcomes[static_cast<size_t>(r)] = std::move(out);
    });

    const RestartOutcome& best = outcomes[static_cast<size_t>(pick_best(outcomes))];
    Strategy strategy =
        product(QuantumOperator(alice_effect_layout(arena.da, arena.da0), best.p_effect),
                QuantumOperator(bob_effect_layout(arena.db0, arena.db), best.q_effect));
    return finalize(w, rho, std::move(strategy), best, opts);
}

namespace {

// Haar-random complete POVM with `branches` elements on C^dim: whole Haar
// bases weighted equally, with surplus branches merged into the last one.
std::vector<Matrix> random_povm(RngStream& rng, Index dim, int branches) {
    const int bases = static_cast<int>((branches + dim - 1) / dim);
    std::vector<Matrix> elements;
    for (int m = 0; m < bases; ++m) {
        const Matrix u = rng.haar_unitary(dim);
        for (Index k = 0; k < dim; ++k)
            elements.push_back((u.col(k) * u.col(k).adjoint()) / static_cast<double>(bases));
    }
    while (static_cast<int>(elements.size()) > branches) {
        elements[elements.size() - 2] += elements.back();
        elements.pop_back();
    }
    return elements;
}

double matched_objective(const Arena& arena, const std::vector<Matrix>& povm,
                         const std::vector<Matrix>& conditional) {
    double total = 0.0;
    for (size_t u = 0; u < povm.size(); ++u)
        total += trace_product(conditional[u], conditioned_on_alice(arena, povm[u]));
    return total;
}

Matrix psd_sqrt(const Matrix& h) {
    const Eigensystem es = eig_hermitian(hermitize(h));
    Matrix out = Matrix::Zero(h.rows(), h.cols());
    for (Index k = 0; k < es.values.size(); ++k)
        if (es.values(k) > 0.0)
            out += std::sqrt(es.values(k)) * es.vectors.col(k) * es.vectors.col(k).adjoint();
    return out;
}

// Exact two-branch exchange: with R = P_u + P_v held fixed, the maximizer of
// Tr[P_u (N_u - N_v)] over 0 <= P_u <= R is R^(1/2) Pi_+(R^(1/2) (N_u - N_v)
// R^(1/2)) R^(1/2). Sweeping all pairs never decreases the objective and
// resolves the near-degenerate branch geometries on which the fixed-point
// update crawls.
void pairwise_exchange_sweep(std::vector<Matrix>& povm, const std::vector<Matrix>& branch_ops) {
    const int b = static_cast<int>(povm.size());
    for (int u = 0; u < b; ++u)
        for (int v = u + 1; v < b; ++v) {
            const Matrix r = povm[static_cast<size_t>(u)] + povm[static_cast<size_t>(v)];
            const Matrix sqrt_r = psd_sqrt(r);
            const Matrix delta =
                branch_ops[static_cast<size_t>(u)] - branch_ops[static_cast<size_t>(v)];
            const Matrix projected = positive_part(hermitize(sqrt_r * delta * sqrt_r)).projector;
            povm[static_cast<size_t>(u)] = hermitize(sqrt_r * projected * sqrt_r);
            povm[static_cast<size_t>(v)] = hermitize(r - povm[static_cast<size_t>(u)]);
        }
}

} // namespace

namespace {

double branch_inner_objective(const std::vector<Matrix>& povm,
                              const std::vector<Matrix>& branch_ops) {
    double total = 0.0;
    for (size_t u = 0; u < povm.size(); ++u)
        total += (povm[u] * branch_ops[u]).trace().real();
    return total;
}

// One Bob-exact / Alice-fixed-point / pairwise-exchange iteration cycle,
// advancing `out` in place until the budget is spent or the gain drops
// below tol.
void matched_iterate(const Arena& arena, int branches, double tol, int budget,
                     RestartOutcome& out) {
    const Matrix eye = Matrix::Identity(arena.d_alice, arena.d_alice);
    std::vector<Matrix>& povm = out.povm;
    std::vector<Matrix>& conditional = out.conditional;
    double objective = out.objective;
    out.converged = false;

    for (int step = 0; step < budget; ++step) {
        // Bob half-step: per branch the exact maximizer is the positive
        // eigenspace projector of the conditioned branch operator.
        double after_bob = 0.0;
        for (int u = 0; u < branches; ++u) {
            const PositivePart bob = positive_part(
                hermitize(conditioned_on_alice(arena, povm[static_cast<size_t>(u)])));
            conditional[static_cast<size_t>(u)] = bob.projector;
            after_bob += bob.weight;
        }

        // Alice half-step: discrimination fixed-point update on the branch
        // operators, shifted to positive semidefinite. The shift c*I only
        // adds the constant c * d to the objective under the completeness
        // constraint, so the argmax is unchanged. The candidate POVM is
        // adopted only when it improves.
        std::vector<Matrix> branch_ops(static_cast<size_t>(branches));
        std::vector<Matrix> shifted(static_cast<size_t>(branches));
        double c = 0.0;
        for (int u = 0; u < branches; ++u) {
            branch_ops[static_cast<size_t>(u)] =
                hermitize(conditioned_on_bob(arena, conditional[static_cast<size_t>(u)]));
            shifted[static_cast<size_t>(u)] = branch_ops[static_cast<size_t>(u)];
            c = std::max(c, -min_eigenvalue(shifted[static_cast<size_t>(u)]));
        }
        for (auto& m : shifted) m += c * eye;

        Matrix s = Matrix::Zero(arena.d_alice, arena.d_alice);
        for (int u = 0; u < branches; ++u)
            s += shifted[static_cast<size_t>(u)] * povm[static_cast<size_t>(u)] *
                 shifted[static_cast<size_t>(u)];
        const Eigensystem es = eig_hermitian(hermitize(s));
        const double cutoff = 1e-14 * std::max(1.0, es.values.cwiseAbs().maxCoeff());
        Matrix s_inv_sqrt = Matrix::Zero(arena.d_alice, arena.d_alice);
        for (Index k = 0; k < es.values.size(); ++k)
            if (es.values(k) > cutoff)
                s_inv_sqrt += es.vectors.col(k) * es.vectors.col(k).adjoint() /
                              std::sqrt(es.values(k));

        std::vector<Matrix> candidate(static_cast<size_t>(branches));
        Matrix total = Matrix::Zero(arena.d_alice, arena.d_alice);
        for (int u = 0; u < branches; ++u) {
            candidate[static_cast<size_t>(u)] =
                hermitize(s_inv_sqrt * shifted[static_cast<size_t>(u)] *
                          povm[static_cast<size_t>(u)] * shifted[static_cast<size_t>(u)] *
                          s_inv_sqrt);
            total += candidate[static_cast<size_t>(u)];
        }
        const Matrix remainder = hermitize(eye - total) / static_cast<double>(branches);
        for (auto& m : candidate) m += remainder;

        if (branch_inner_objective(candidate, branch_ops) > after_bob)
            povm = std::move(candidate);

        // Exact pairwise exchanges mop up what the fixed point leaves.
        pairwise_exchange_sweep(povm, branch_ops);
        const double next = std::max(after_bob, branch_inner_objective(povm, branch_ops));

        out.trace.push_back(next);
        ++out.iterations;
        if (next - objective < tol) {
            objective = std::max(objective, next);
            out.converged = true;
            break;
        }
        objective = next;
    }
    out.objective = objective;
}

} // namespace

PayoffReport seesaw_matched(const Witness& w, const QuantumOperator& rho,
                            const SeesawOptions& opts) {
    validate_options(opts);
    const Arena arena = make_arena(w, rho);
    const int branches = opts.branches > 0 ? opts.branches : static_cast<int>(arena.d_alice);
    if (branches < 1) throw ValidationError("seesaw_matched: branch count must be positive");

    // Two-phase schedule within the per-restart iteration budget: explore
    // every restart up to the exploration cap, then finish only the leading
    // restarts. No restart ever exceeds max_iter iterations in total.
    const int explore_budget = std::min(opts.max_iter, 200);

    std::vector<RestartOutcome> outcomes(static_cast<size_t>(opts.restarts));
    for_each_restart(opts.restarts, opts.threads, [&](int r) {
        RngStream rng = derive_stream(opts.seed, static_cast<std::uint64_t>(r));
        RestartOutcome out;
        out.povm = random_povm(rng, arena.d_alice, branches);
        for (int u = 0; u < branches; ++u)
            out.conditional.push_back(rng.haar_projector(arena.d_bob));
        out.objective = matched_objective(arena, out.povm, out.conditional);
        out.trace.push_back(out.objective);
        matched_iterate(arena, branches, opts.tol, explore_budget, out);
        outcomes[static_cast<size_t>(r)] = std::move(out);
    });

    if (opts.max_iter > explore_budget) {
        std::vector<int> order(static_cast<size_t>(opts.restarts));
        for (int r = 0; r < opts.restarts; ++r) order[static_cast<size_t>(r)] = r;
        std::sort(order.begin(), order.end(), [&](int lhs, int rhs) {
            const double a = outcomes[static_cast<size_t>(lhs)].objective;
            const double b = outcomes[static_cast<size_t>(rhs)].objective;
            return a != b ? a > b : lhs < rhs;
        });
        const int finish = std::min<int>(3, opts.restarts);
        for_each_restart(finish, opts.threads, [&](int k) {
            RestartOutcome& out = outcomes[static_cast<size_t>(order[static_cast<size_t>(k)])];
            if (!out.converged)
                matched_iterate(arena, branches, opts.tol, opts.max_iter - out.iterations,
                                out);
        });
    }

    const RestartOutcome& best = outcomes[static_cast<size_t>(pick_best(outcomes))];
    std::vector<QuantumOperator> povm_ops, conditional_ops;
    for (const auto& m : best.povm)
        povm_ops.emplace_back(alice_effect_layout(arena.da, arena.da0), m);
    for (const auto& m : best.conditional)
        conditional_ops.emplace_back(bob_effect_layout(arena.db0, arena.db), m);
    Strategy strategy = matched_one_way(std::move(povm_ops), std::move(conditional_ops));
    return finalize(w, rho, std::move(strategy), best, opts);
}

namespace {

void require_measure_inputs(const Witness& w, const QuantumOperator& rho) {
    if (w.kind != WitnessKind::decomposable || !w.source_vector.has_value())
        throw ValidationError("payoff_npt: requires a decomposable witness with source vector");
    if (rho.layout().size() != 2 || !rho.layout().has(labels::a) || !rho.layout().has(labels::b))
        throw LayoutError("payoff_npt: shared state must live on [A, B]");
    if (w.dim_a0() != rho.layout().dim_of(labels::a) ||
        w.dim_b0() != rho.layout().dim_of(labels::b))
        throw LayoutError("payoff_npt: witness and state dimensions must match");
    const SchmidtForm schmidt = schmidt_decompose(*w.source_vector, w.dim_a0(), w.dim_b0());
    if (schmidt.rank() != w.D)
        throw ValidationError("payoff_npt: witness source vector must have full Schmidt rank");
}

Strategy trivial_strategy(Index da, Index da0, Index db0, Index db) {
    return product(QuantumOperator(alice_effect_layout(da, da0),
                                   Matrix::Zero(da * da0, da * da0)),
                   QuantumOperator(bob_effect_layout(db0, db),
                                   Matrix::Zero(db0 * db, db0 * db)));
}

// Projectors onto the maximally entangled vector on each side; achieves
// Tr(V rho) / (d_A d_B) on the game of V and certifies positivity whenever V
// detects rho.
Strategy maxent_product_strategy(Index da, Index db) {
    const Vector phi_a = maxent_vector(da);
    const Vector phi_b = maxent_vector(db);
    return product(QuantumOperator(alice_effect_layout(da, da), projector(phi_a)),
                   QuantumOperator(bob_effect_layout(db, db), projector(phi_b)));
}

struct NptContext {
    bool ppt = false;
    Vector phi;                           // most negative eigenvector of rho^(T_B)
    std::optional<Witness> detecting;     // witness built from phi
    std::optional<PayoffReport> inner;    // optimized play of the detecting game
};

NptContext npt_inner(const QuantumOperator& rho, const SeesawOptions& opts) {
    NptContext ctx;
    const Index da = rho.layout().dim_of(labels::a);
    const Index db = rho.layout().dim_of(labels::b);
    const Eigensystem es = eig_hermitian(partial_transpose(rho, {labels::b}));
    if (es.values(es.values.size() - 1) >= -psd_tol) {
        ctx.ppt = true;
        return ctx;
    }
    ctx.phi = es.vectors.col(es.values.size() - 1);
    ctx.detecting = decomposable_witness(ctx.phi, da, db);
    ctx.inner = seesaw_matched(*ctx.detecting, rho, opts);
    // Guaranteed-positive fallback for seesaw misfires.
    Strategy fallback = maxent_product_strategy(da, db);
    const double fallback_value = payoff_via_witness(*ctx.detecting, rho, fallback);
    if (fallback_value > ctx.inner->value) {
        ctx.inner->value = fallback_value;
        ctx.inner->strategy = std::move(fallback);
    }
    return ctx;
}

PayoffReport pull_back_report(const Witness& w, const QuantumOperator& rho,
                              const NptContext& ctx, const SeesawOptions& opts) {
    const FilterResult filter =
        slocc_filter(*w.source_vector, ctx.phi, w.dim_a0(), w.dim_b0());
    Strategy pulled = filter_pullback(ctx.inner->strategy, filter);
    PayoffReport report{0.0, std::move(pulled), upper_bound_global(w, rho),
                        ctx.inner->iterations, ctx.inner->restarts,
                        ctx.inner->converged, opts.seed, ctx.inner->trace, ""};
    report.value = payoff_via_witness(w, rho, report.strategy);
    for (auto& t : report.trace) t *= filter.q;
    return report;
}

PayoffReport ppt_report(const Witness& w, const QuantumOperator& rho,
                        const SeesawOptions& opts) {
    const Index da = rho.layout().dim_of(labels::a);
    const Index db = rho.layout().dim_of(labels::b);
    PayoffReport report{0.0, trivial_strategy(da, w.dim_a0(), w.dim_b0(), db),
                        upper_bound_global(w, rho), 0, 0, true, opts.seed, {}, ""};
    return report;
}

} // namespace

PayoffReport payoff_npt(const Witness& w, const QuantumOperator& rho,
                        const SeesawOptions& opts) {
    require_measure_inputs(w, rho);
    const NptContext ctx = npt_inner(rho, opts);
    if (ctx.ppt) return ppt_report(w, rho, opts);
    return pull_back_report(w, rho, ctx, opts);
}

PayoffReport payoff_bullet(const QuantumOperator& rho, const SeesawOptions& opts,
                           int family_size) {
    if (family_size < 1)
        throw ValidationError("payoff_bullet: family size must be positive");
    if (rho.layout().size() != 2 || !rho.layout().has(labels::a) || !rho.layout().has(labels::b))
        throw LayoutError("payoff_bullet: state must live on [A, B]");
    const Index da = rho.layout().dim_of(labels::a);
    const Index db = rho.layout().dim_of(labels::b);
    const Index d = std::min(da, db);
    if (d < 2)
        throw LayoutError("payoff_bullet: both local dimensions must be at least 2");

    const std::string note = (da * db > 6)
                                 ? "lower bound only; PPT-entanglement blind"
                                 : "certified lower bound over the decomposable family";

    // Witness family: decomposable witnesses from the most negative
    // eigenvectors of rho^(T_B), plus the maximally entangled one. Every
    // member is scored by the NPT pipeline; all pipelines share the same
    // detecting game, so its seesaw is run once.
    const Eigensystem es = eig_hermitian(partial_transpose(rho, {labels::b}));
    std::vector<Witness> family;
    for (int k = 0; k < family_size; ++k) {
        const Index idx = es.values.size() - 1 - k;
        if (idx < 0 || es.values(idx) >= -psd_tol) break;
        const SchmidtForm schmidt = schmidt_decompose(Vector(es.vectors.col(idx)), da, db);
        if (schmidt.rank() != d) continue; // pipeline needs full-rank sources
        family.push_back(decomposable_witness(es.vectors.col(idx), da, db));
    }
    family.push_back(decomposable_witness(embedded_maxent_vector(da, db), da, db));

    const NptContext ctx = npt_inner(rho, opts);
    if (ctx.ppt) {
        PayoffReport report = ppt_report(family.back(), rho, opts);
        report.note = note;
        return report;
    }

    std::optional<PayoffReport> best;
    for (const auto& w : family) {
        PayoffReport candidate = pull_back_report(w, rho, ctx, opts);
        if (!best || candidate.value > best->value) best = std::move(candidate);
    }
    best->note = note;
    return std::move(*best);
}

SLambdaVerdict s_lambda_member(const QuantumOperator& rho, double lambda,
                               const SeesawOptions& opts) {
    if (lambda < 0.0)
        throw ValidationError("s_lambda_member: lambda must be nonnegative");
    SLambdaVerdict verdict{lambda, false, payoff_bullet(rho, opts)};
    verdict.member = verdict.certificate.value <= lambda + 1e-9;
    return verdict;
}

} // namespace sqgame
