"""Determinants over commutative group-algebra coefficients.

For an abelian subgroup H the lifted matrices live over the commutative ring
RH, where an honest determinant exists.  Composing it with the lift gives a
determinant for matrices over the full (noncommutative) group algebra:
multiplicative, transversal-independent, and deciding invertibility.

Three evaluation strategies are provided and must agree exactly:

``leibniz``
    The signed permutation sum.  Exponential; the independent oracle.
``minor``
    Laplace expansion along the first remaining column, memoized on the
    bitmask of remaining rows: O(2^n * n) ring products, division-free.
``dft``
    Apply each character of H entrywise (a ring map RH -> polynomials),
    take the determinant there, and reassemble coefficients by exact
    Fourier inversion: coeff(h) = |H|^{-1} sum_chi chi(h^{-1}) det_chi.

``RH`` has zero divisors, so nothing here attempts fraction-free
elimination; every route is division-free or works componentwise in a
cyclotomic field.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .algebra import AlgebraElement, AlgebraMatrix
from .cyclotomic import Cyclotomic
from .errors import (
    NotAbelian,
    NotNormal,
    NotSupportedOnSubgroup,
    SingularElement,
    StrategyDisagreement,
    SymbolicCoefficientsUnsupported,
)
from .groups import Character, SubgroupHandle, characters
from .multipoly import MultiPoly
from .regular import RegularRepContext, lift, recover_preimage

#: Permutation sums beyond this size are pointless even as oracles.
LEIBNIZ_CAP = 8

STRATEGIES = ("leibniz", "minor", "dft")


# ----------------------------------------------------------------------
# generic determinant cores (any commutative ring values with +, -, *)


def _det_leibniz(rows, one):
    n = len(rows)
    if n == 0:
        return one
    if n > LEIBNIZ_CAP:
        raise ValueError(f"leibniz determinant capped at {LEIBNIZ_CAP}x{LEIBNIZ_CAP}")
    total = None
    for perm in itertools.permutations(range(n)):
        term = rows[0][perm[0]]
        for i in range(1, n):
            term = term * rows[i][perm[i]]
        if _permutation_sign(perm) < 0:
            term = -term
        total = term if total is None else total + term
    return total


def _permutation_sign(perm) -> int:
    seen = [False] * len(perm)
    sign = 1
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        cur = start
        while not seen[cur]:
            seen[cur] = True
            cur = perm[cur]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def _det_minor(rows, one):
    """First-column Laplace expansion memoized on a bitmask of rows.

    The submatrix for a mask of k rows always uses the last k columns and is
    expanded along its first column, so each submatrix is visited once:
    O(2^n * n) ring products, no division.
    """
    n = len(rows)
    if n == 0:
        return one
    memo = {0: one}

    def solve(mask):
        cached = memo.get(mask)
        if cached is not None:
            return cached
        live = [i for i in range(n) if mask & (1 << i)]
        col = n - len(live)  # columns col..n-1 are in play
        total = None
        for pos, i in enumerate(live):
            entry = rows[i][col]
            sub = solve(mask & ~(1 << i))
            term = entry * sub
            if pos % 2:
                term = -term
            total = term if total is None else total + term
        memo[mask] = total
        return total

    return solve((1 << n) - 1)


def det_poly_matrix(rows, nvars: int, strategy: str = "minor") -> MultiPoly:
    """Determinant of a plain polynomial matrix."""
    one = MultiPoly.one(nvars)
    if strategy == "leibniz":
        return _det_leibniz(rows, one)
    if strategy == "minor":
        return _det_minor(rows, one)
    raise ValueError(f"unknown polynomial determinant strategy {strategy!r}")


# ----------------------------------------------------------------------
# determinants over RH


def apply_character(element: AlgebraElement, chi: Character) -> MultiPoly:
    """The ring map RH -> R sending h to chi(h), applied to one element."""
    total = MultiPoly.zero(element.nvars)
    for h, poly in element.coeffs.items():
        total = total + poly.scale(chi.value(h))
    return total


def det_commutative(M: AlgebraMatrix, H: SubgroupHandle,
                    strategy: str = "dft") -> AlgebraElement:
    """Determinant of a matrix with entries supported on an abelian subgroup.

    ``strategy`` is one of ``leibniz``, ``minor``, ``dft`` or ``cross-check``
    (run every applicable strategy and fail loudly on a mismatch).
    """
    if not H.is_abelian():
        raise NotAbelian("determinants need an abelian coefficient subgroup")
    if not M.is_supported_on(H):
        raise NotSupportedOnSubgroup("matrix entries must be supported on the subgroup")
    if strategy == "cross-check":
        results = []
        names = []
        for name in STRATEGIES:
            if name == "leibniz" and M.size > LEIBNIZ_CAP:
                continue
            results.append(det_commutative(M, H, name))
            names.append(name)
        for name, res in zip(names[1:], results[1:]):
            if res != results[0]:
                raise StrategyDisagreement(
                    f"strategies {names[0]} and {name} disagree"
                )
        return results[0]
    if strategy == "leibniz":
        return _det_leibniz(M.rows, AlgebraElement.identity(M.group, M.nvars))
    if strategy == "minor":
        return _det_minor(M.rows, AlgebraElement.identity(M.group, M.nvars))
    if strategy == "dft":
        return _det_character_dft(M, H)
    raise ValueError(f"unknown determinant strategy {strategy!r}")


def _det_character_dft(M: AlgebraMatrix, H: SubgroupHandle) -> AlgebraElement:
    chars = characters(H)
    per_char = []
    for chi in chars:
        rows = [[apply_character(entry, chi) for entry in row] for row in M.rows]
        per_char.append(det_poly_matrix(rows, M.nvars, "minor"))
    inv_order = Fraction(1, H.order)
    coeffs = {}
    for h in H.elements:
        acc = MultiPoly.zero(M.nvars)
        for chi, det_chi in zip(chars, per_char):
            acc = acc + det_chi.scale(chi.value_at_inverse(h))
        acc = acc.scale(inv_order)
        if not acc.is_zero:
            coeffs[h] = acc
    return AlgebraElement(M.group, M.nvars, coeffs)


def ncdet(ctx: RegularRepContext, A: AlgebraMatrix,
          strategy: str = "dft") -> AlgebraElement:
    """The determinant of A through the regular representation.

    An element of RH; independent of the transversal used to lift.
    """
    if not ctx.subgroup.is_abelian():
        raise NotAbelian("the determinant needs an abelian subgroup")
    return det_commutative(lift(ctx, A), ctx.subgroup, strategy)


# ----------------------------------------------------------------------
# characteristic polynomials


@dataclass
class CharPoly:
    """A monic characteristic polynomial with H-supported coefficients.

    ``coefficients[k]`` is the algebra-element coefficient of the central
    variable raised to k; the leading coefficient is the identity.
    """

    degree: int
    coefficients: dict

    def coefficient(self, k: int, group, nvars: int) -> AlgebraElement:
        got = self.coefficients.get(k)
        return got if got is not None else AlgebraElement.zero(group, nvars)

    def constant_term(self, group, nvars: int) -> AlgebraElement:
        return self.coefficient(0, group, nvars)

    def __eq__(self, other):
        if not isinstance(other, CharPoly):
            return NotImplemented
        return self.degree == other.degree and self.coefficients == other.coefficients

    __hash__ = None

    def as_algebra_element(self, group, nvars: int) -> AlgebraElement:
        """Embed sum_k a_k X^k as a single algebra element (X is the
        reserved trailing polynomial variable)."""
        x_var = nvars - 1
        acc = AlgebraElement.zero(group, nvars)
        for k, coeff in self.coefficients.items():
            xk = MultiPoly.monomial(nvars, tuple(0 if i != x_var else k
                                                 for i in range(nvars)))
            acc = acc + coeff.scale(xk)
        return acc


def char_poly(ctx: RegularRepContext, A: AlgebraMatrix,
              strategy: str = "dft") -> CharPoly:
    """det(X I - lift(A)) arranged by powers of the central variable X."""
    if not ctx.subgroup.is_abelian():
        raise NotAbelian("characteristic polynomials need an abelian subgroup")
    lifted = lift(ctx, A)
    n = lifted.size
    x_var = A.nvars - 1
    x_poly = MultiPoly.variable(A.nvars, x_var)
    x_identity = AlgebraMatrix.identity(ctx.group, n, A.nvars).map_entries(
        lambda entry: entry.scale(x_poly))
    det = det_commutative(x_identity - lifted, ctx.subgroup, strategy)
    coefficients = {}
    for h, poly in det.coeffs.items():
        for k, part in poly.split_by_variable(x_var).items():
            if part.is_zero:
                continue
            cur = coefficients.get(k)
            piece = AlgebraElement.from_poly(ctx.group, h, part)
            coefficients[k] = piece if cur is None else cur + piece
    cp = CharPoly(n, coefficients)
    top = cp.coefficient(n, ctx.group, A.nvars)
    if top != AlgebraElement.identity(ctx.group, A.nvars):  # pragma: no cover
        raise AssertionError("characteristic polynomial is not monic")
    return cp


def cayley_hamilton_residual(ctx: RegularRepContext, A: AlgebraMatrix,
                             strategy: str = "dft") -> AlgebraMatrix:
    """Evaluate the characteristic polynomial at its own matrix.

    The contract is the zero matrix; the residual is returned so callers can
    assert exactness.
    """
    cp = char_poly(ctx, A, strategy)
    power = AlgebraMatrix.identity(ctx.group, A.size, A.nvars)
    acc = AlgebraMatrix.zero(ctx.group, A.size, A.nvars)
    for k in range(cp.degree + 1):
        coeff = cp.coefficients.get(k)
        if coeff is not None and not coeff.is_zero:
            acc = acc + power.scale_left(coeff)
        if k < cp.degree:
            power = power * A
    return acc


def char_poly_conjugation_check(ctx: RegularRepContext, A: AlgebraMatrix,
                                g: int, strategy: str = "dft") -> bool:
    """Conjugating the matrix by a group element fixes its characteristic
    polynomial when the subgroup is normal (and abelian)."""
    if not ctx.subgroup.is_normal():
        raise NotNormal("conjugation invariance needs a normal subgroup")
    conjugated = A.map_entries(lambda entry: entry.conjugate_by(g))
    return char_poly(ctx, A, strategy) == char_poly(ctx, conjugated, strategy)


def coefficient_centrality_check(ctx: RegularRepContext, A: AlgebraMatrix,
                                 strategy: str = "dft") -> dict:
    """Report on the characteristic polynomial's coefficients.

    Every coefficient must be central in RG and supported on H (normal
    abelian H).  The constant term equals the determinant up to the parity
    sign (-1)^(m[G:H]) of the degree, and the coefficient below the leading
    one is minus the trace of the lift.
    """
    if not ctx.subgroup.is_normal():
        raise NotNormal("coefficient centrality needs a normal subgroup")
    cp = char_poly(ctx, A, strategy)
    H = ctx.subgroup
    per_coefficient = {}
    for k in range(cp.degree + 1):
        coeff = cp.coefficient(k, ctx.group, A.nvars)
        per_coefficient[k] = {
            "central": coeff.is_central("both"),
            "h_supported": coeff.supported_on(H),
        }
    det = ncdet(ctx, A, strategy)
    sign = 1 if cp.degree % 2 == 0 else -1
    constant_matches = cp.constant_term(ctx.group, A.nvars) == det.scale(sign)
    trace_coeff = cp.coefficient(cp.degree - 1, ctx.group, A.nvars)
    trace_matches = trace_coeff == -lift(ctx, A).trace()
    return {
        "per_coefficient": per_coefficient,
        "constant_is_signed_det": constant_matches,
        "subleading_is_minus_trace": trace_matches,
        "all_central_h_supported": all(
            v["central"] and v["h_supported"] for v in per_coefficient.values()
        ),
    }


# ----------------------------------------------------------------------
# character twists


def character_twist(M: AlgebraMatrix, chi: Character) -> AlgebraMatrix:
    """Scale the coefficient of every group element g by chi(g), entrywise.

    The character must be defined on the whole (abelian) group, possibly as
    a quotient character composed with the projection.
    """
    G = M.group
    if not G.is_abelian():
        raise NotAbelian("character twists are defined over abelian groups")
    if set(chi.exponents) != set(G.elements()):
        raise ValueError("character is not defined on the whole group")

    def twist(entry: AlgebraElement) -> AlgebraElement:
        return AlgebraElement._make(
            G, entry.nvars,
            {g: poly.scale(chi.value(g)) for g, poly in entry.coeffs.items()})

    return M.map_entries(twist)


def twist_commutes_with_det(M: AlgebraMatrix, chi: Character,
                            strategy: str = "minor") -> bool:
    """det(twist(M)) == twist(det(M)) over an abelian group."""
    full = M.group.full_subgroup()
    lhs = det_commutative(character_twist(M, chi), full, strategy)
    rhs_mat = AlgebraMatrix(M.group, M.nvars, [[det_commutative(M, full, strategy)]])
    rhs = character_twist(rhs_mat, chi).rows[0][0]
    return lhs == rhs


def quotient_factorization_check(ctx: RegularRepContext, A: AlgebraMatrix,
                                 strategy: str = "minor") -> bool:
    """Over an abelian group, the determinant of the lift factors through
    the quotient characters:

        det(lift(A)) = prod over chi in (G/H)^ of det(twist of A by chi).

    Both sides are compared as exact elements of the group algebra.
    """
    from .groups import lift_quotient_character, quotient_group

    G = ctx.group
    if not G.is_abelian():
        raise NotAbelian("the quotient factorization check needs an abelian group")
    Q, proj = quotient_group(G, ctx.subgroup)
    lhs = det_commutative(lift(ctx, A), ctx.subgroup, strategy)
    full = G.full_subgroup()
    rhs = AlgebraElement.identity(G, A.nvars)
    for qchar in characters(Q.full_subgroup()):
        chi = lift_quotient_character(G, proj, qchar)
        rhs = rhs * det_commutative(character_twist(A, chi), full, strategy)
    return lhs == rhs


# ----------------------------------------------------------------------
# invertibility


def invert_supported_element(D: AlgebraElement, H: SubgroupHandle) -> AlgebraElement:
    """Invert a numeric element of RH through the character decomposition.

    The inverse exists iff every character value of D is nonzero; the
    coefficients come back by exact Fourier inversion.
    """
    if not H.is_abelian():
        raise NotAbelian("character inversion needs an abelian subgroup")
    D = D.restrict(H)
    if not D.is_numeric():
        raise SymbolicCoefficientsUnsupported(
            "inversion is implemented for numeric coefficients only"
        )
    chars = characters(H)
    values = []
    for chi in chars:
        v = apply_character(D, chi).constant_value()
        if v.is_zero:
            raise SingularElement("a character value vanishes; the element is singular")
        values.append(v.inverse())
    inv_order = Fraction(1, H.order)
    coeffs = {}
    for h in H.elements:
        acc = Cyclotomic.zero()
        for chi, v in zip(chars, values):
            acc = acc + chi.value_at_inverse(h) * v
        poly = MultiPoly.constant(D.nvars, acc * inv_order)
        if not poly.is_zero:
            coeffs[h] = poly
    return AlgebraElement(D.group, D.nvars, coeffs)


def adjugate(M: AlgebraMatrix, H: SubgroupHandle,
             strategy: str = "minor") -> AlgebraMatrix:
    """Classical adjugate over the commutative subalgebra RH."""
    n = M.size
    if n == 1:
        return AlgebraMatrix.identity(M.group, 1, M.nvars)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            minor_rows = [[M.rows[a][b] for b in range(n) if b != i]
                          for a in range(n) if a != j]
            minor = det_commutative(
                AlgebraMatrix(M.group, M.nvars, minor_rows), H, strategy)
            if (i + j) % 2:
                minor = -minor
            row.append(minor)
        out.append([AlgebraMatrix(M.group, M.nvars, [[entry]]) for entry in row])
    return AlgebraMatrix(M.group, M.nvars,
                         [[cell.rows[0][0] for cell in row] for row in out])


def is_invertible(ctx: RegularRepContext, A: AlgebraMatrix,
                  strategy: str = "dft") -> bool:
    """Decide invertibility by reducing the determinant down to a scalar.

    The determinant lands in RH; lifting it again over the trivial subgroup
    of H reduces it to a single polynomial, and the matrix is invertible iff
    that polynomial is a unit (a nonzero constant).
    """
    from .groups import left_transversal_in

    det = ncdet(ctx, A, strategy)
    H = ctx.subgroup
    trivial = ctx.group.trivial_subgroup()
    inner = RegularRepContext(
        ctx.group, H, trivial, left_transversal_in(H, trivial), 1)
    reduced = det_commutative(
        lift(inner, AlgebraMatrix(ctx.group, A.nvars, [[det]])), trivial, "minor")
    scalar = reduced.coefficient(ctx.group.identity)
    return (not scalar.is_zero) and scalar.is_constant


def invert_numeric(ctx: RegularRepContext, A: AlgebraMatrix,
                   strategy: str = "dft") -> AlgebraMatrix:
    """Invert a matrix with numeric coefficients.

    The lift is inverted over RH by adjugate and character-decomposed
    determinant, and the preimage of the inverse is read off the first
    block column.  The result B satisfies A*B = B*A = I.
    """
    if not A.is_numeric():
        raise SymbolicCoefficientsUnsupported(
            "invert_numeric needs variable-free coefficients"
        )
    lifted = lift(ctx, A)
    det = det_commutative(lifted, ctx.subgroup, strategy)
    det_inv = invert_supported_element(det, ctx.subgroup)
    adj = adjugate(lifted, ctx.subgroup)
    inverse_lift = adj.scale_left(det_inv)
    return recover_preimage(ctx, inverse_lift)
