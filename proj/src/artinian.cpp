#include "cmlab/artinian.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "cmlab/groebner.hpp"

namespace cmlab {

FiniteAlgebra flatten_ring(Ring& R) {
    Module& RM = R.as_module();
    if (RM.dim() != 0)
        throw std::invalid_argument("flatten_ring: ring is not Artinian");
    const auto& basis = RM.std_basis();
    FiniteAlgebra A;
    A.fp = R.ctx().fp;
    int n = static_cast<int>(basis.size());
    A.deg.resize(static_cast<std::size_t>(n));
    A.labels.resize(static_cast<std::size_t>(n));
    A.basis_mono.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        A.deg[static_cast<std::size_t>(i)] = basis[static_cast<std::size_t>(i)].degree;
        A.basis_mono[static_cast<std::size_t>(i)] = basis[static_cast<std::size_t>(i)].mono;
        A.labels[static_cast<std::size_t>(i)] =
            mono_to_string(basis[static_cast<std::size_t>(i)].mono, R.var_names());
    }
    if (n == 0 || !basis[0].mono.is_one())
        throw std::logic_error("flatten_ring: basis does not start at the unit");

    auto index_of = [&](const Monomial& m) -> int {
        for (int i = 0; i < n; ++i)
            if (basis[static_cast<std::size_t>(i)].mono == m) return i;
        return -1;
    };
    for (int i = 0; i < n; ++i) {
        DenseMat Mi(n, n);
        for (int j = 0; j < n; ++j) {
            Monomial prod = mono_mul(basis[static_cast<std::size_t>(i)].mono,
                                     basis[static_cast<std::size_t>(j)].mono);
            FreeVector nf = normal_form(R.ctx(), FreeVector::term(0, prod, 1), R.ideal_gb());
            for (const Term& t : nf.terms()) {
                int k = index_of(t.mono);
                if (k < 0) throw std::logic_error("flatten_ring: missing standard monomial");
                Mi.at(k, j) = t.coeff;
            }
        }
        A.mult.push_back(std::move(Mi));
    }
    for (int v = 0; v < R.nvars(); ++v) {
        int idx = index_of(Monomial::var(v));
        if (idx < 0)
            throw std::logic_error("flatten_ring: a variable is not a standard monomial");
        A.var_index.push_back(idx);
    }
    return A;
}

FiniteModule flatten_module(const FiniteAlgebra& A, const Module& M) {
    if (M.dim() != 0)
        throw std::invalid_argument("flatten_module: module has infinite length");
    const auto& basis = M.std_basis();
    FiniteModule W;
    int n = static_cast<int>(basis.size());
    W.deg.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        W.deg[static_cast<std::size_t>(i)] = basis[static_cast<std::size_t>(i)].degree;
    int nv = static_cast<int>(A.var_index.size());
    for (int v = 0; v < nv; ++v) {
        std::vector<std::uint32_t> flat = M.action_matrix(v);
        DenseMat X(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                X.at(i, j) = flat[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                                  static_cast<std::size_t>(j)];
        W.act.push_back(std::move(X));
    }
    return W;
}

namespace {

std::vector<std::uint32_t> act_by_monomial(const PrimeField& fp, const FiniteModule& M,
                                           const Monomial& m, std::vector<std::uint32_t> v) {
    for (std::size_t var = 0; var < M.act.size(); ++var)
        for (int i = 0; i < m.e[var]; ++i) v = mat_apply(fp, M.act[var], v);
    return v;
}

std::vector<int> minimal_generator_coords(const PrimeField& fp, const FiniteModule& M) {
    int n = M.dim();
    RowSpan span(fp, n);
    for (const DenseMat& X : M.act)
        for (int j = 0; j < n; ++j) {
            std::vector<std::uint32_t> col(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) col[static_cast<std::size_t>(i)] = X.at(i, j);
            span.contains_or_insert(std::move(col));
        }
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return M.deg[static_cast<std::size_t>(a)] < M.deg[static_cast<std::size_t>(b)];
    });
    std::vector<int> gens;
    for (int i : order) {
        std::vector<std::uint32_t> e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(i)] = 1;
        if (!span.contains_or_insert(std::move(e))) gens.push_back(i);
    }
    return gens;
}

// One resolution step: the syzygy module of the free cover A^mu -> M, with
// homogeneous basis obtained from degreewise kernels.
FiniteModule syzygy_step(const FiniteAlgebra& A, const FiniteModule& M,
                         const std::vector<int>& gens, const FdLimits& lim) {
    const PrimeField& fp = A.fp;
    int n = M.dim();
    int da = A.dim();
    int mu = static_cast<int>(gens.size());
    long long free_dim = static_cast<long long>(da) * mu;
    if (free_dim > lim.max_total_dim)
        throw ResourceLimitError("fd resolution: dimension limit exceeded");

    struct SlotInfo {
        int gen, alg;
        int degree;
    };
    std::vector<SlotInfo> slots;
    slots.reserve(static_cast<std::size_t>(free_dim));
    for (int g = 0; g < mu; ++g)
        for (int a = 0; a < da; ++a)
            slots.push_back(SlotInfo{g, a,
                                     M.deg[static_cast<std::size_t>(gens[static_cast<std::size_t>(g)])] +
                                         A.deg[static_cast<std::size_t>(a)]});
    // cover images per slot
    std::vector<std::vector<std::uint32_t>> image(slots.size());
    for (std::size_t s = 0; s < slots.size(); ++s) {
        std::vector<std::uint32_t> v(static_cast<std::size_t>(n), 0);
        v[static_cast<std::size_t>(gens[static_cast<std::size_t>(slots[s].gen)])] = 1;
        image[s] = act_by_monomial(fp, M, A.basis_mono[static_cast<std::size_t>(slots[s].alg)],
                                   std::move(v));
    }

    // degreewise kernels of the cover
    std::map<int, std::vector<std::size_t>> by_degree;
    for (std::size_t s = 0; s < slots.size(); ++s) by_degree[slots[s].degree].push_back(s);

    std::vector<std::vector<std::uint32_t>> kernel;  // in full slot coordinates
    std::vector<int> kdeg;
    for (const auto& [D, idxs] : by_degree) {
        DenseMat mat(n, static_cast<int>(idxs.size()));
        for (std::size_t j = 0; j < idxs.size(); ++j)
            for (int i = 0; i < n; ++i) mat.at(i, static_cast<int>(j)) = image[idxs[j]][static_cast<std::size_t>(i)];
        for (auto& kv : mat_kernel(fp, std::move(mat))) {
            std::vector<std::uint32_t> full(slots.size(), 0);
            for (std::size_t j = 0; j < idxs.size(); ++j) full[idxs[j]] = kv[j];
            kernel.push_back(std::move(full));
            kdeg.push_back(D);
        }
    }

    // module structure on the kernel: apply the blockwise variable action and
    // solve back in the kernel basis
    FiniteModule W;
    W.deg = kdeg;
    int k = static_cast<int>(kernel.size());
    SpanSolver solver(fp, kernel);
    int nv = static_cast<int>(M.act.size());
    for (int v = 0; v < nv; ++v) {
        const DenseMat& L = A.var_action(v);
        DenseMat X(k, k);
        for (int j = 0; j < k; ++j) {
            std::vector<std::uint32_t> img(slots.size(), 0);
            // x_v * slot (g, a) = sum_b L[b, a] slot (g, b)
            for (std::size_t s = 0; s < slots.size(); ++s) {
                std::uint32_t c = kernel[static_cast<std::size_t>(j)][s];
                if (!c) continue;
                int g = slots[s].gen, a = slots[s].alg;
                for (int b = 0; b < da; ++b) {
                    std::uint32_t f = L.at(b, a);
                    if (!f) continue;
                    std::size_t target = static_cast<std::size_t>(g) * static_cast<std::size_t>(da) +
                                         static_cast<std::size_t>(b);
                    img[target] = fp.add(img[target], fp.mul(c, f));
                }
            }
            auto sol = solver.solve(std::move(img));
            if (!sol)
                throw std::logic_error("fd resolution: kernel is not closed under the action");
            for (int i = 0; i < k; ++i) X.at(i, j) = (*sol)[static_cast<std::size_t>(i)];
        }
        W.act.push_back(std::move(X));
    }
    return W;
}

} // namespace

std::vector<long long> fd_betti(const FiniteAlgebra& A, const FiniteModule& M, int n_max,
                                const FdLimits& lim) {
    std::vector<long long> betti;
    FiniteModule cur = M;
    long long total = 0;
    for (int step = 0; step <= n_max; ++step) {
        std::vector<int> gens = minimal_generator_coords(A.fp, cur);
        betti.push_back(static_cast<long long>(gens.size()));
        if (step == n_max) break;
        if (gens.empty()) {
            // zero module resolves to zero forever
            for (int rest = step + 1; rest <= n_max; ++rest) betti.push_back(0);
            break;
        }
        total += static_cast<long long>(A.dim()) * static_cast<long long>(gens.size());
        if (total > lim.max_total_dim)
            throw ResourceLimitError("fd_betti: total dimension limit exceeded");
        cur = syzygy_step(A, cur, gens, lim);
    }
    return betti;
}

FiniteModule fd_dual(const FiniteAlgebra& A, const FiniteModule& M) {
    FiniteModule D;
    int n = M.dim();
    D.deg.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        D.deg[static_cast<std::size_t>(i)] = -M.deg[static_cast<std::size_t>(i)];
    for (const DenseMat& X : M.act) D.act.push_back(mat_transpose(X));
    (void)A;
    return D;
}

AgreeReport agree_check(Ring& R, const Module& M, int n_max) {
    AgreeReport rep;
    if (M.is_zero()) return rep;  // vacuous agreement
    FiniteAlgebra A = flatten_ring(R);
    FiniteModule W = flatten_module(A, M);

    auto len = M.length();
    if (!len || *len != W.dim()) {
        rep.agree = false;
        rep.first_discrepancy = "lambda: graded=" + std::to_string(len ? *len : -1) +
                                " oracle=" + std::to_string(W.dim());
        return rep;
    }
    std::vector<long long> fb = fd_betti(A, W, n_max);
    for (int i = 0; i <= n_max; ++i) {
        long long g = M.betti(i);
        if (g != fb[static_cast<std::size_t>(i)]) {
            rep.agree = false;
            rep.first_discrepancy = "beta_" + std::to_string(i) + ": graded=" + std::to_string(g) +
                                    " oracle=" + std::to_string(fb[static_cast<std::size_t>(i)]);
            return rep;
        }
    }
    std::vector<long long> fm = fd_bass(A, W, n_max);
    for (int i = 0; i <= n_max; ++i) {
        long long g = M.bass(i);
        if (g != fm[static_cast<std::size_t>(i)]) {
            rep.agree = false;
            rep.first_discrepancy = "mu^" + std::to_string(i) + ": graded=" + std::to_string(g) +
                                    " oracle=" + std::to_string(fm[static_cast<std::size_t>(i)]);
            return rep;
        }
    }
    return rep;
}

} // namespace cmlab
