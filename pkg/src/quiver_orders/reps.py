"""Quiver representations with exact coefficients, reflection functors, and
orbit point counts.

A representation assigns dims[i-1] to vertex i and to each arrow a: s -> t a
matrix of shape dims[t-1] x dims[s-1] (rows act on the source coordinates).
Indecomposables are constructed by walking the canonical adapted word of the
quiver backwards with reflection functors, one simple at a time; by Gabriel's
theorem this yields one indecomposable per positive root over any field.
"""

from __future__ import annotations

import functools
import json
from dataclasses import dataclass
from fractions import Fraction

from .convex_order import adapted_order
from .errors import VerificationError
from .fields import RATIONALS, field_from_spec
from .kostant import KostantPartition
from .linalg import Matrix, mat, nullspace, rref, solve, transpose, zeros
from .quivers import Quiver, reflect_quiver, sinks, sources
from .root_system import Root, reflect_root


@dataclass(frozen=True)
class QuiverRep:
    quiver: Quiver
    field: object
    dims: tuple[int, ...]
    mats: tuple[Matrix, ...]

    def __post_init__(self) -> None:
        n = self.quiver.datum.n
        if len(self.dims) != n or any(d < 0 for d in self.dims):
            raise ValueError("bad dimension vector")
        if len(self.mats) != len(self.quiver.arrows):
            raise ValueError("one matrix per arrow required")
        for (s, t), m in zip(self.quiver.arrows, self.mats):
            if len(m) != self.dims[t - 1]:
                raise ValueError(f"matrix for {s}->{t} has wrong row count")
            if any(len(row) != self.dims[s - 1] for row in m):
                raise ValueError(f"matrix for {s}->{t} has wrong column count")

    def mat_for(self, arrow_index: int) -> Matrix:
        return self.mats[arrow_index]


def zero_rep(Q: Quiver, field, dims: tuple[int, ...]) -> QuiverRep:
    mats = tuple(
        zeros(field, dims[t - 1], dims[s - 1]) for s, t in Q.arrows
    )
    return QuiverRep(Q, field, tuple(dims), mats)


def simple_rep(Q: Quiver, field, i: int) -> QuiverRep:
    dims = tuple(1 if j == i else 0 for j in Q.datum.vertices())
    return zero_rep(Q, field, dims)


def _require_same_context(M: QuiverRep, N: QuiverRep) -> None:
    if M.quiver != N.quiver:
        raise ValueError("representations live over different quivers")
    if M.field != N.field:
        raise ValueError("representations live over different fields")


def direct_sum(M: QuiverRep, N: QuiverRep) -> QuiverRep:
    _require_same_context(M, N)
    F = M.field
    dims = tuple(a + b for a, b in zip(M.dims, N.dims))
    mats = []
    for idx, (s, t) in enumerate(M.quiver.arrows):
        a, b = M.mats[idx], N.mats[idx]
        rows = []
        for r in range(M.dims[t - 1]):
            rows.append(tuple(a[r]) + tuple(F.zero for _ in range(N.dims[s - 1])))
        for r in range(N.dims[t - 1]):
            rows.append(tuple(F.zero for _ in range(M.dims[s - 1])) + tuple(b[r]))
        mats.append(tuple(rows))
    return QuiverRep(M.quiver, F, dims, tuple(mats))


def hom_dim(M: QuiverRep, N: QuiverRep) -> int:
    """dim of the space of morphisms M -> N (exact nullity computation).

    A morphism is a tuple of maps f_i: M_i -> N_i with f_t x_a = y_a f_s for
    every arrow a: s -> t.
    """
    _require_same_context(M, N)
    F = M.field
    n = M.quiver.datum.n
    sizes = [N.dims[i] * M.dims[i] for i in range(n)]
    offsets = [0] * n
    for i in range(1, n):
        offsets[i] = offsets[i - 1] + sizes[i - 1]
    total = sum(sizes)
    rows = []
    for idx, (s, t) in enumerate(M.quiver.arrows):
        x = M.mats[idx]
        y = N.mats[idx]
        si, ti = s - 1, t - 1
        for r in range(N.dims[ti]):
            for c in range(M.dims[si]):
                row = [F.zero] * total
                for u in range(M.dims[ti]):
                    row[offsets[ti] + r * M.dims[ti] + u] = x[u][c]
                for v in range(N.dims[si]):
                    pos = offsets[si] + v * M.dims[si] + c
                    row[pos] = F.sub(row[pos], y[r][v])
                rows.append(tuple(row))
    if not rows:
        return total
    return total - len(rref(F, tuple(rows))[1])


def end_dim(M: QuiverRep) -> int:
    return hom_dim(M, M)


def bgp_reflect_rep(i: int, M: QuiverRep) -> QuiverRep:
    """Reflection functor at a sink (kernel construction) or source (cokernel).

    At a sink i the new space at i is the kernel of the assembled map
    (+)_a M_src(a) -> M_i, with the reversed arrows given by the block
    projections of the kernel basis.  At a source it is the cokernel of
    M_i -> (+)_a M_tgt(a), with reversed arrows given by the quotient map
    restricted to the blocks.  Arrow order is preserved.
    """
    Q = M.quiver
    F = M.field
    newQ = reflect_quiver(i, Q)
    d = M.dims
    if i in sinks(Q):
        in_idx = Q.arrows_into(i)
        block_sizes = [d[Q.arrows[a][0] - 1] for a in in_idx]
        S = sum(block_sizes)
        phi_rows = []
        for r in range(d[i - 1]):
            row: list = []
            for a in in_idx:
                row.extend(M.mats[a][r])
            phi_rows.append(tuple(row))
        kernel = nullspace(F, tuple(phi_rows), ncols=S)
        newdim = len(kernel)
        offsets = {}
        off = 0
        for a, size in zip(in_idx, block_sizes):
            offsets[a] = off
            off += size
        new_mats = []
        for a, (s, t) in enumerate(Q.arrows):
            if a in offsets:
                src_dim = d[s - 1]
                block = offsets[a]
                new_mats.append(
                    tuple(
                        tuple(kernel[c][block + r] for c in range(newdim))
                        for r in range(src_dim)
                    )
                )
            else:
                new_mats.append(M.mats[a])
    elif i in sources(Q):
        out_idx = Q.arrows_out_of(i)
        block_sizes = [d[Q.arrows[a][1] - 1] for a in out_idx]
        T = sum(block_sizes)
        psi_rows = []
        for a in out_idx:
            psi_rows.extend(M.mats[a])
        R, pivots = rref(F, transpose(tuple(psi_rows)), ncols=T)
        pivot_pos = {p: s for s, p in enumerate(pivots)}
        nonpivots = [t for t in range(T) if t not in pivot_pos]
        newdim = len(nonpivots)
        offsets = {}
        off = 0
        for a, size in zip(out_idx, block_sizes):
            offsets[a] = off
            off += size
        new_mats = []
        for a, (s, t) in enumerate(Q.arrows):
            if a in offsets:
                tgt_dim = d[t - 1]
                block = offsets[a]
                rows = []
                for j, np_ in enumerate(nonpivots):
                    row = []
                    for c in range(tgt_dim):
                        cg = block + c
                        if cg in pivot_pos:
                            row.append(F.neg(R[pivot_pos[cg]][np_]))
                        else:
                            row.append(F.one if np_ == cg else F.zero)
                    rows.append(tuple(row))
                new_mats.append(tuple(rows))
            else:
                new_mats.append(M.mats[a])
    else:
        raise ValueError(f"vertex {i} is neither a sink nor a source")
    new_dims = tuple(
        newdim if j == i - 1 else d[j] for j in range(Q.datum.n)
    )
    return QuiverRep(newQ, F, new_dims, tuple(new_mats))


@functools.cache
def all_indecomposables(Q: Quiver, field) -> dict[Root, QuiverRep]:
    """The indecomposable representation for each positive root, by walking
    the canonical adapted word backwards with reflection functors."""
    order = adapted_order(Q)
    word = order.word
    chain = [Q]
    for m in range(len(word) - 1):
        chain.append(reflect_quiver(word[m], chain[-1]))
    datum = Q.datum
    out: dict[Root, QuiverRep] = {}
    for k in range(len(word)):
        X = simple_rep(chain[k], field, word[k])
        expected = datum.alpha(word[k])
        for m in range(k - 1, -1, -1):
            X = bgp_reflect_rep(word[m], X)
            expected = reflect_root(datum, word[m], expected)
            if X.dims != expected:
                raise VerificationError(
                    f"reflection walk for beta_{k+1} produced dims {X.dims}, expected {expected}"
                )
        if X.dims != order.beta[k]:
            raise VerificationError("walk did not land on the expected root")
        if hom_dim(X, X) != 1:
            raise VerificationError(f"endomorphism dim of M({order.beta[k]}) is not 1")
        out[order.beta[k]] = X
    return out


def indecomposable(Q: Quiver, beta: Root, field) -> QuiverRep:
    reps = all_indecomposables(Q, field)
    if beta not in reps:
        raise ValueError(f"{beta} is not a positive root of {Q.datum.label}")
    return reps[beta]


@functools.cache
def hom_matrix(Q: Quiver, field) -> tuple[tuple[int, ...], ...]:
    """G[k][l] = dim Hom(M(beta_k), M(beta_l)) over the adapted enumeration."""
    order = adapted_order(Q)
    reps = all_indecomposables(Q, field)
    return tuple(
        tuple(hom_dim(reps[bk], reps[bl]) for bl in order.beta)
        for bk in order.beta
    )


def rep_of_kp(lam: KostantPartition, field) -> QuiverRep:
    """Direct sum of indecomposables with the partition's multiplicities."""
    Q = lam.order.quiver
    if Q is None:
        raise ValueError("partition's order has no quiver attached")
    reps = all_indecomposables(Q, field)
    acc = zero_rep(Q, field, tuple(0 for _ in range(Q.datum.n)))
    for c, b in zip(lam.counts, lam.order.beta):
        for _ in range(c):
            acc = direct_sum(acc, reps[b])
    return acc


def iso_class(M: QuiverRep) -> KostantPartition:
    """Multiplicities of the indecomposable summands of M, via Hom counts.

    Solves the triangular system hom(M, M(beta_l)) =
    sum_k n_k hom(M(beta_k), M(beta_l)) exactly; the solution is checked to
    be a non-negative integer vector of the right dimension vector.
    """
    order = adapted_order(M.quiver)
    reps = all_indecomposables(M.quiver, M.field)
    G = hom_matrix(M.quiver, M.field)
    N = order.length
    h = tuple(Fraction(hom_dim(M, reps[b])) for b in order.beta)
    A = mat(
        (Fraction(G[k][l]) for k in range(N)) for l in range(N)
    )
    x = solve(RATIONALS, A, h)
    if x is None:
        raise VerificationError("Hom-count system is inconsistent")
    counts = []
    for v in x:
        if v.denominator != 1 or v < 0:
            raise VerificationError(f"non-integral or negative multiplicity {v}")
        counts.append(int(v))
    lam = KostantPartition(order, tuple(counts))
    if lam.nu != M.dims:
        raise VerificationError("summand multiplicities do not add up to the dims")
    return lam


def gl_order(n: int, q: int) -> int:
    """Number of invertible n x n matrices over a field with q elements."""
    total = 1
    for j in range(n):
        total *= q**n - q**j
    return total


def rep_space_dim(Q: Quiver, nu: tuple[int, ...]) -> int:
    """Dimension of the space of representations with dimension vector nu."""
    return sum(nu[s - 1] * nu[t - 1] for s, t in Q.arrows)


def orbit_point_count(lam: KostantPartition, q: int) -> int:
    """Number of F_q-points of the isomorphism-class orbit of M(lam).

    Uses |orbit| = |prod_i GL_nu_i| / |Aut|, with |Aut| = q^(e - sum n_k^2) *
    prod_k |GL_{n_k}| where e = dim End(M(lam)); the division is checked to
    be exact.
    """
    Q = lam.order.quiver
    if Q is None:
        raise ValueError("partition's order has no quiver attached")
    G = hom_matrix(Q, RATIONALS)
    n = lam.counts
    N = len(n)
    e = sum(n[k] * n[l] * G[k][l] for k in range(N) for l in range(N))
    unipotent = e - sum(c * c for c in n)
    if unipotent < 0:
        raise VerificationError("endomorphism count below the reductive part")
    aut = q**unipotent
    for c in n:
        aut *= gl_order(c, q)
    group = 1
    for d in lam.nu:
        group *= gl_order(d, q)
    if group % aut != 0:
        raise VerificationError("automorphism order does not divide the group order")
    return group // aut


def rep_to_json(M: QuiverRep) -> str:
    """Serialize a representation; fields limited to rationals and prime fields.

    Matrices are flat row-major integer lists; rational entries must be
    integers (all representations built here are).
    """
    spec = M.field.spec()
    if spec.startswith("gf "):
        raise ValueError("extension-field representations are not serialized")
    flat_mats = []
    for m in M.mats:
        entries = []
        for row in m:
            for x in row:
                if isinstance(x, Fraction):
                    if x.denominator != 1:
                        raise ValueError(f"non-integer entry {x}")
                    entries.append(int(x))
                else:
                    entries.append(int(x))
        flat_mats.append(entries)
    payload = {
        "type": M.quiver.datum.label,
        "arrows": [list(a) for a in M.quiver.arrows],
        "field": spec,
        "dims": list(M.dims),
        "mats": flat_mats,
    }
    return json.dumps(payload, indent=2)


def rep_from_json(text: str) -> QuiverRep:
    from .quivers import quiver as make_quiver

    data = json.loads(text)
    Q = make_quiver(data["type"], [tuple(a) for a in data["arrows"]])
    F = field_from_spec(data["field"])
    dims = tuple(data["dims"])
    mats = []
    for (s, t), flat in zip(Q.arrows, data["mats"]):
        r, c = dims[t - 1], dims[s - 1]
        if len(flat) != r * c:
            raise ValueError(f"matrix for {s}->{t} has {len(flat)} entries, wants {r * c}")
        mats.append(
            tuple(
                tuple(F.from_int(flat[row * c + col]) for col in range(c))
                for row in range(r)
            )
        )
    return QuiverRep(Q, F, dims, tuple(mats))
