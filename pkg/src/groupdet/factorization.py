"""Group determinants and their factorizations in a subgroup's algebra.

The group determinant of a finite group G is the determinant of the
|G| x |G| matrix whose (g, h) entry is the variable x, indexed by g * h^{-1}:
a homogeneous integer polynomial of degree |G|.

For an abelian subgroup H, the determinant of the lifted generic element is
an element of RH, the relative group determinant.  Its coefficients a_h are
homogeneous of degree [G:H] and assemble into |H| factors, one per character
of H:

    product over chi of (sum_h chi(h) a_h h)  =  Theta(G) * identity,

and applying the augmentation map to each factor turns this into a genuine
polynomial factorization of Theta(G).  For H the whole (abelian) group the
factors are the classical linear forms; for H normal the coefficients a_h
are constant on conjugacy classes.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import AlgebraElement, AlgebraMatrix, generic_element
from .determinant import det_poly_matrix, ncdet
from .errors import FixtureMissing, NotAbelian, OrderCapExceeded
from .groups import (
    FiniteGroup,
    SubgroupHandle,
    Transversal,
    abelian_subgroups,
    characters,
)
from .multipoly import MultiPoly
from .regular import regular_context

#: Direct group-determinant expansion is exponential; stop at this order.
DEFAULT_ORDER_CAP = 10


def group_determinant(G: FiniteGroup, *, strategy: str = "minor",
                      order_cap: int = DEFAULT_ORDER_CAP,
                      nvars: int = None) -> MultiPoly:
    """The determinant of the matrix (x_{g h^{-1}})_{g, h}.

    Rows and columns run over the group in index order; entry (i, j) is the
    variable indexed by ``mul(i, inv(j))``.  Homogeneous of degree |G| with
    integer coefficients.
    """
    if G.order > order_cap:
        raise OrderCapExceeded(
            f"group determinant of order {G.order} exceeds the cap {order_cap}"
        )
    nvars = nvars or (G.order + 1)
    rows = [[MultiPoly.variable(nvars, G.mul(i, G.inv(j))) for j in G.elements()]
            for i in G.elements()]
    return det_poly_matrix(rows, nvars, strategy)


def theta_relative(G: FiniteGroup, H: SubgroupHandle, *,
                   transversal: Transversal = None,
                   strategy: str = "dft") -> AlgebraElement:
    """The relative group determinant: ncdet of the generic element.

    An element of RH whose coefficients are homogeneous of degree [G:H] in
    the group variables.  For H = {e} it is the group determinant times the
    identity; for H the whole abelian group it is the generic element itself.
    """
    if not H.is_abelian():
        raise NotAbelian("the relative group determinant needs an abelian subgroup")
    ctx = regular_context(G, H, transversal=transversal)
    alpha = generic_element(G)
    return ncdet(ctx, AlgebraMatrix(G, alpha.nvars, [[alpha]]), strategy)


@dataclass
class FactorizationResult:
    """The coefficients, factors and verification inputs of a factorization.

    ``coefficients`` maps h in H to the homogeneous polynomial a_h;
    ``factors_algebra[i]`` is sum_h chi_i(h) a_h h and ``factors_scalar[i]``
    its augmentation sum_h chi_i(h) a_h, both in the deterministic character
    order; ``theta`` is the group determinant computed by the direct route.
    """

    group: FiniteGroup
    subgroup: SubgroupHandle
    transversal: Transversal
    characters: list = field(repr=False)
    coefficients: dict = field(repr=False)
    factors_algebra: list = field(repr=False)
    factors_scalar: list = field(repr=False)
    theta: MultiPoly = field(repr=False)


def dedekind_factorization(G: FiniteGroup, H: SubgroupHandle, *,
                           transversal: Transversal = None,
                           strategy: str = "dft") -> FactorizationResult:
    """Factor the group determinant through an abelian subgroup.

    The coefficients a_h are read off the relative group determinant; the
    scalar factors come from the algebra factors via the augmentation map.
    """
    if not H.is_abelian():
        raise NotAbelian("the factorization needs an abelian subgroup")
    relative = theta_relative(G, H, transversal=transversal, strategy=strategy)
    nvars = relative.nvars
    coefficients = {h: relative.coefficient(h) for h in H.elements}
    chars = characters(H)
    factors_algebra = []
    factors_scalar = []
    for chi in chars:
        factor = AlgebraElement.zero(G, nvars)
        for h in H.elements:
            poly = coefficients[h].scale(chi.value(h))
            factor = factor + AlgebraElement.from_poly(G, h, poly)
        factors_algebra.append(factor)
        factors_scalar.append(factor.augmentation())
    theta = group_determinant(G, nvars=nvars)
    if transversal is None:
        from .groups import left_transversal

        transversal = left_transversal(G, H)
    return FactorizationResult(
        group=G, subgroup=H, transversal=transversal, characters=chars,
        coefficients=coefficients, factors_algebra=factors_algebra,
        factors_scalar=factors_scalar, theta=theta)


def verify_factorization(result: FactorizationResult) -> dict:
    """Exact verification report for a factorization.

    Checks: (i) the algebra factors multiply to theta * identity in RG;
    (ii) the scalar factors multiply to theta in R; (iii) every coefficient
    is homogeneous of degree [G:H]; (iv) for normal H, coefficients agree on
    G-conjugate subgroup elements (skipped otherwise, reported as None);
    (v) theta recomputed along independent routes (Leibniz for small orders,
    first-column minor expansion, the lift over the trivial subgroup, and
    the scalar factor product) is identical.
    """
    G, H = result.group, result.subgroup
    nvars = result.theta.nvars
    index = H.index

    algebra_product = AlgebraElement.identity(G, nvars)
    for factor in result.factors_algebra:
        algebra_product = algebra_product * factor
    theta_e = AlgebraElement.from_poly(G, G.identity, result.theta)
    algebra_ok = algebra_product == theta_e

    scalar_product = MultiPoly.one(nvars)
    for factor in result.factors_scalar:
        scalar_product = scalar_product * factor
    scalar_ok = scalar_product == result.theta

    homogeneous_ok = all(poly.is_homogeneous(index)
                         for poly in result.coefficients.values())

    conjugation_ok = None
    if H.is_normal():
        conjugation_ok = True
        by_element = result.coefficients
        for cls_ in G.conjugacy_classes():
            members = [h for h in cls_ if h in H]
            first = None
            for h in members:
                if first is None:
                    first = by_element[h]
                elif by_element[h] != first:
                    conjugation_ok = False

    routes = {"minor": result.theta}
    routes["trivial-subgroup-lift"] = theta_via_trivial_subgroup(G, nvars=nvars)
    routes["scalar-product"] = scalar_product
    if G.order <= 6:
        routes["leibniz"] = group_determinant(G, strategy="leibniz", nvars=nvars)
    names = sorted(routes)
    routes_ok = all(routes[n] == routes[names[0]] for n in names[1:])

    return {
        "algebra_product_is_theta_times_identity": algebra_ok,
        "scalar_product_is_theta": scalar_ok,
        "coefficients_homogeneous_of_index_degree": homogeneous_ok,
        "conjugate_coefficients_equal": conjugation_ok,
        "theta_routes_agree": routes_ok,
        "theta_routes": sorted(routes),
        "all_passed": all(ok for ok in (
            algebra_ok, scalar_ok, homogeneous_ok, routes_ok,
            conjugation_ok is not False)),
    }


def theta_via_trivial_subgroup(G: FiniteGroup, *, nvars: int = None) -> MultiPoly:
    """The group determinant read off the lift over the trivial subgroup."""
    relative = theta_relative(G, G.trivial_subgroup(), strategy="minor")
    poly = relative.coefficient(G.identity)
    if nvars and poly.nvars != nvars:  # pragma: no cover - shared convention
        raise ValueError("variable count mismatch")
    return poly


def invertibility_criterion(G: FiniteGroup, assignment: dict) -> bool:
    """Whether the numeric specialization of the generic element is a unit.

    Evaluates the group determinant at the assignment (element index ->
    number); the element is invertible exactly when the value is nonzero.
    """
    theta = group_determinant(G)
    return not theta.eval(dict(assignment)).is_zero


def specialize_generic(G: FiniteGroup, assignment: dict) -> AlgebraElement:
    """The numeric group-algebra element with the given coefficients."""
    return AlgebraElement.from_coeff_map(G, dict(assignment))


def invert_element(G: FiniteGroup, H: SubgroupHandle,
                   element: AlgebraElement) -> AlgebraElement:
    """Explicitly invert a numeric element through an abelian subgroup.

    Raises SingularElement when no inverse exists.  The choice of abelian
    subgroup changes the route, never the outcome.
    """
    from .determinant import invert_numeric

    ctx = regular_context(G, H)
    matrix = AlgebraMatrix(G, element.nvars, [[element]])
    return invert_numeric(ctx, matrix).rows[0][0]


#: Irreducible representation degrees for the nonabelian catalog groups.
#: Abelian groups need no fixture: all their irreducible degrees are 1.
IRREP_DEGREES = {
    "sym:3": (1, 1, 2),
    "dihedral:4": (1, 1, 1, 1, 2),
    "quaternion8": (1, 1, 1, 1, 2),
    "sym:4": (1, 1, 2, 3, 3),
}


def irrep_degrees_for(G: FiniteGroup) -> tuple[int, ...]:
    """Fixture lookup; abelian groups are derived, others must be shipped."""
    if G.is_abelian():
        return (1,) * G.order
    degrees = IRREP_DEGREES.get(G.catalog_key or "")
    if degrees is None:
        raise FixtureMissing(
            f"no irreducible-degree fixture for {G.catalog_key or 'this group'}"
        )
    return degrees


def degree_bound_report(G: FiniteGroup, fixture_degrees=None) -> dict:
    """Check max irreducible degree <= min abelian-subgroup index.

    Also confirms the sum-of-squares count.  Subgroups are enumerated by
    brute force, so this is restricted to small groups.
    """
    if fixture_degrees is None:
        degrees = irrep_degrees_for(G)
    else:
        degrees = tuple(int(d) for d in fixture_degrees)
    if not degrees:
        raise FixtureMissing("empty degree fixture")
    candidates = abelian_subgroups(G)
    min_index = min(H.index for H in candidates)
    max_degree = max(degrees)
    return {
        "degrees": degrees,
        "min_abelian_subgroup_index": min_index,
        "max_degree": max_degree,
        "bound_holds": max_degree <= min_index,
        "bound_tight": max_degree == min_index,
        "squares_sum_to_order": sum(d * d for d in degrees) == G.order,
    }
