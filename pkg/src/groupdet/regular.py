"""Left regular representations of group-algebra matrices.

Given a subgroup H with transversal T = (t_1, ..., t_r) and a block size m,
``lift`` maps an m x m matrix A over RG to the unique (mr) x (mr) matrix B
over RH with

    A * (t_1 I_m  ...  t_r I_m) = (t_1 I_m  ...  t_r I_m) * B.

Block (i, j) of an (mr) x (mr) matrix means rows m*i .. m*(i+1)-1 and the
matching columns (0-based).  Writing A = sum_t t * A_t with each A_t
supported on H, the blocks are

    B_(i,j) = sum over t in T with t_i^{-1} t t_j in H of
              t_i^{-1} * t * A_t * t_j,

which is how ``lift`` computes them.  When H is normal the same matrix also
factors through a Kronecker product against the quotient's permutation
representation (``kronecker_form``), and lifting through a chain of
subgroups composes (``compose_check``).

When the quotient G/H is abelian, the image of ``lift`` is exactly the set
of matrices commuting with the generators returned by
``commutant_generator``; ``recover_preimage`` reads the unique preimage off
the first block column.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import AlgebraElement, AlgebraMatrix
from .errors import (
    InvalidTransversal,
    NotASubgroupChain,
    NotNormal,
    NotSupportedOnSubgroup,
    QuotientNotAbelian,
)
from .groups import (
    FiniteGroup,
    SubgroupHandle,
    Transversal,
    left_transversal,
    left_transversal_in,
    quotient_group,
)


@dataclass(frozen=True)
class RegularRepContext:
    """Everything a lift needs: ambient set, subgroup, transversal, block size.

    ``ambient`` is the full group in ordinary use; lifting a matrix that is
    itself a lift (for composition) uses a subgroup as the ambient set.
    """

    group: FiniteGroup
    ambient: SubgroupHandle
    subgroup: SubgroupHandle
    transversal: Transversal
    block_size: int = 1

    def __post_init__(self):
        H, T = self.subgroup, self.transversal
        if H.parent is not self.group or self.ambient.parent is not self.group:
            raise InvalidTransversal("subgroup and ambient must share the group")
        if T.subgroup != H or T.ambient != self.ambient:
            raise InvalidTransversal("transversal does not match the context")
        if self.block_size < 1:
            raise ValueError("block size must be positive")

    @property
    def index(self) -> int:
        return len(self.transversal.reps)

    @property
    def lifted_size(self) -> int:
        return self.block_size * self.index


def regular_context(G: FiniteGroup, H: SubgroupHandle, *, block_size: int = 1,
                    transversal: Transversal = None) -> RegularRepContext:
    """Context for lifting m x m matrices over RG to matrices over RH."""
    ambient = G.full_subgroup()
    if transversal is None:
        transversal = left_transversal(G, H)
    return RegularRepContext(G, ambient, H, transversal, block_size)


def _check_input(ctx: RegularRepContext, A: AlgebraMatrix):
    if A.group is not ctx.group:
        raise InvalidTransversal("matrix group does not match the context")
    if A.size != ctx.block_size:
        raise InvalidTransversal(
            f"matrix size {A.size} does not match block size {ctx.block_size}"
        )
    if not A.is_supported_on(ctx.ambient):
        raise NotSupportedOnSubgroup("matrix is not supported on the ambient set")


def coset_decompose(ctx: RegularRepContext, A: AlgebraMatrix) -> dict[int, AlgebraMatrix]:
    """Split A = sum_t t * A_t with every A_t supported on the subgroup.

    Keys are transversal positions; the decomposition is unique for a fixed
    transversal.  Zero summands are included so callers can iterate T.
    """
    _check_input(ctx, A)
    G, m, nvars = ctx.group, ctx.block_size, A.nvars
    lookup = ctx.transversal.lookup
    parts = {i: [[dict() for _ in range(m)] for _ in range(m)]
             for i in range(ctx.index)}
    for p in range(m):
        for q in range(m):
            for g, poly in A.rows[p][q].coeffs.items():
                i, h = lookup[g]
                parts[i][p][q][h] = poly
    out = {}
    for i, rows in parts.items():
        out[i] = AlgebraMatrix(G, nvars, [
            [AlgebraElement(G, nvars, cell) for cell in row] for row in rows])
    return out


def lift(ctx: RegularRepContext, A: AlgebraMatrix) -> AlgebraMatrix:
    """The left regular representation of A: a block matrix over RH.

    Each term c*g of an entry contributes c at the subgroup element
    t_i^{-1} g t_j of block (i, j), where i is the coset of g t_j.  Summing
    over the coset pieces t A_t recovers the closed block formula
    sum_t [t_i^{-1} t t_j in H] t_i^{-1} t A_t t_j whenever H is normal; for
    a non-normal subgroup different terms of one coset piece may land in
    different blocks, and the per-term construction is the one the defining
    identity forces.
    """
    _check_input(ctx, A)
    G, m = ctx.group, ctx.block_size
    T = ctx.transversal.reps
    H = ctx.subgroup
    table = G.table
    lookup = ctx.transversal.lookup
    r = len(T)
    nvars = A.nvars
    cells = [[{} for _ in range(m * r)] for _ in range(m * r)]
    for p in range(m):
        for q in range(m):
            for g, poly in A.rows[p][q].coeffs.items():
                row = table[g]
                for j, tj in enumerate(T):
                    i, h = lookup[row[tj]]
                    # g = t_i h t_j^{-1} is unique per (i, j, h): no collisions
                    cells[i * m + p][j * m + q][h] = poly
    out = AlgebraMatrix(G, nvars, [
        [AlgebraElement(G, nvars, cell) for cell in row] for row in cells])
    if not out.is_supported_on(H):  # pragma: no cover - lookup guarantees this
        raise NotSupportedOnSubgroup("lift produced coefficients outside the subgroup")
    return out


def defining_identity_holds(ctx: RegularRepContext, A: AlgebraMatrix,
                            lifted: AlgebraMatrix = None) -> bool:
    """Check A * (t_1 I ... t_r I) = (t_1 I ... t_r I) * lift(A) exactly."""
    _check_input(ctx, A)
    if lifted is None:
        lifted = lift(ctx, A)
    G, m = ctx.group, ctx.block_size
    T = ctx.transversal.reps
    for j, tj in enumerate(T):
        lhs = A.mul_element_right(tj)
        rhs = AlgebraMatrix.zero(G, m, A.nvars)
        for i, ti in enumerate(T):
            rhs = rhs + lifted.block(i, j, m).mul_element_left(ti)
        if lhs != rhs:
            return False
    return True


def kronecker_form(ctx: RegularRepContext, A: AlgebraMatrix) -> AlgebraMatrix:
    """Rebuild the lift of A through the quotient's permutation matrices.

    Requires a normal subgroup.  The result equals ``lift(ctx, A)`` entry for
    entry: conjugating the Kronecker sum of quotient permutation matrices
    with the coset summands by diag(t_1 I, ..., t_r I) lands back on the
    block formula.
    """
    _check_input(ctx, A)
    if ctx.ambient.order != ctx.group.order:
        raise InvalidTransversal("kronecker_form expects the full group as ambient")
    H = ctx.subgroup
    if not H.is_normal():
        raise NotNormal("kronecker_form needs a normal subgroup")
    G, m = ctx.group, ctx.block_size
    T = ctx.transversal.reps
    Q, proj = quotient_group(G, H)
    parts = coset_decompose(ctx, A)
    r = len(T)
    zero_block = AlgebraMatrix.zero(G, m, A.nvars)
    blocks = [[zero_block for _ in range(r)] for _ in range(r)]
    for k, t in enumerate(T):
        summand = parts[k].mul_element_left(t)  # t * A_t
        qt = proj[t]
        for j in range(r):
            i = Q.table[qt][j]
            blocks[i][j] = blocks[i][j] + summand
    # Conjugate by P = diag(t_1 I, ..., t_r I).
    for i in range(r):
        ti_inv = G.inv(T[i])
        for j in range(r):
            blocks[i][j] = blocks[i][j].mul_element_left(ti_inv).mul_element_right(T[j])
    return AlgebraMatrix.from_blocks(blocks)


def compose_transversal(G: FiniteGroup, outer: Transversal, inner: Transversal) -> Transversal:
    """The transversal {t_p * u_q} ordered with p varying fastest."""
    reps = [G.mul(t, u) for u in inner.reps for t in outer.reps]
    return Transversal(inner.subgroup, reps, outer.ambient)


def compose_check(G: FiniteGroup, H: SubgroupHandle, K: SubgroupHandle,
                  T: Transversal = None, U: Transversal = None,
                  A: AlgebraMatrix = None, *, block_size: int = 1) -> bool:
    """Whether lifting through K-in-H after H-in-G equals lifting K-in-G.

    T is a transversal of H in G and U one of K inside H; the combined
    transversal is {t_p u_q} with p varying fastest, which makes the two
    block layouts line up entry for entry.
    """
    if not all(k in H for k in K.elements):
        raise NotASubgroupChain("K is not contained in H")
    if T is None:
        T = left_transversal(G, H)
    if U is None:
        U = left_transversal_in(H, K)
    if U.ambient != H:
        raise NotASubgroupChain("inner transversal must live inside H")
    if A is None:
        from .algebra import generic_element
        A = AlgebraMatrix(G, G.order + 1, [[generic_element(G)]])
        block_size = 1
    ctx_outer = RegularRepContext(G, G.full_subgroup(), H, T, block_size)
    step_one = lift(ctx_outer, A)
    ctx_inner = RegularRepContext(G, H, K, U, block_size * len(T.reps))
    step_two = lift(ctx_inner, step_one)
    V = compose_transversal(G, T, U)
    ctx_direct = RegularRepContext(G, G.full_subgroup(), K, V, block_size)
    direct = lift(ctx_direct, A)
    return step_two == direct


# ----------------------------------------------------------------------
# commutant characterization (abelian quotient)


def _quotient_abelian(ctx: RegularRepContext):
    if ctx.ambient.order != ctx.group.order:
        raise InvalidTransversal("commutant machinery expects the full group as ambient")
    H = ctx.subgroup
    if not H.is_normal():
        raise NotNormal("the commutant characterization needs a normal subgroup")
    Q, proj = quotient_group(ctx.group, H)
    if not Q.is_abelian():
        raise QuotientNotAbelian("the commutant characterization needs an abelian quotient")
    return Q, proj


def commutant_generator(ctx: RegularRepContext, t: int, *, nvars: int = None) -> AlgebraMatrix:
    """The block permutation matrix attached to the coset of t.

    Built as P^{-1} (L(tH) (x) I_m) P where L is the quotient's permutation
    representation and P = diag(t_1 I, ..., t_r I): block (i, j) is
    t_i^{-1} t_j I_m exactly when t maps coset j to coset i, else zero.
    Lifted matrices commute with every one of these.
    """
    Q, proj = _quotient_abelian(ctx)
    G, m = ctx.group, ctx.block_size
    T = ctx.transversal.reps
    nvars = nvars or (G.order + 1)
    r = len(T)
    zero_block = AlgebraMatrix.zero(G, m, nvars)
    qt = proj[t]
    blocks = [[zero_block for _ in range(r)] for _ in range(r)]
    for j in range(r):
        i = Q.table[qt][j]
        shift = G.mul(G.inv(T[i]), T[j])
        blocks[i][j] = AlgebraMatrix.identity(G, m, nvars).mul_element_left(shift)
    return AlgebraMatrix.from_blocks(blocks)


def is_lift_image(ctx: RegularRepContext, B: AlgebraMatrix) -> bool:
    """Membership test for the image of ``lift``: commuting with every
    commutant generator (one per transversal element)."""
    Q, _ = _quotient_abelian(ctx)
    if B.size != ctx.lifted_size:
        raise InvalidTransversal(
            f"matrix size {B.size} does not match the lifted size {ctx.lifted_size}"
        )
    if not B.is_supported_on(ctx.subgroup):
        raise NotSupportedOnSubgroup(
            "membership is defined for matrices over the subgroup algebra"
        )
    for t in ctx.transversal.reps:
        J = commutant_generator(ctx, t, nvars=B.nvars)
        if J * B != B * J:
            return False
    return True


def recover_preimage(ctx: RegularRepContext, B: AlgebraMatrix) -> AlgebraMatrix:
    """Reassemble A from the first block column of a lifted matrix.

    For B = lift(A) this returns A (for any B in the image the first block
    column determines the preimage: A = sum_p t_p * B_(p,0) * t_1^{-1}).
    """
    if B.size != ctx.lifted_size:
        raise InvalidTransversal(
            f"matrix size {B.size} does not match the lifted size {ctx.lifted_size}"
        )
    G, m = ctx.group, ctx.block_size
    T = ctx.transversal.reps
    t1_inv = G.inv(T[0])
    acc = AlgebraMatrix.zero(G, m, B.nvars)
    for p, tp in enumerate(T):
        acc = acc + B.block(p, 0, m).mul_element_left(tp).mul_element_right(t1_inv)
    return acc
