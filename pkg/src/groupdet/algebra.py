"""Group-algebra elements and matrices over a polynomial coefficient ring.

An :class:`AlgebraElement` maps group-element indices to nonzero
:class:`~groupdet.multipoly.MultiPoly` coefficients.  Multiplication is the
convolution product, so for nonabelian groups the order of factors matters.
Matrices over the algebra keep the entry product order.

Elements supported on a subgroup double as elements of that subgroup's
algebra; ``restrict`` is the checked cast.  Every value records its
polynomial variable count ``nvars`` so elements built over extended variable
sets (e.g. two independent symbolic elements) stay compatible.
"""

from __future__ import annotations

from fractions import Fraction

from .cyclotomic import Cyclotomic
from .errors import GroupMismatch, NotSupportedOnSubgroup, SizeMismatch
from .groups import FiniteGroup, SubgroupHandle
from .multipoly import MultiPoly

_SCALARS = (int, Fraction, Cyclotomic)


def default_nvars(G: FiniteGroup) -> int:
    """One variable per group element plus the reserved trailing variable."""
    return G.order + 1


class AlgebraElement:
    """An element of the group algebra RG; immutable by convention."""

    __slots__ = ("group", "nvars", "coeffs")

    def __init__(self, group: FiniteGroup, nvars: int, coeffs: dict):
        # Trusted internal constructor; zero polynomials must be absent.
        self.group = group
        self.nvars = nvars
        self.coeffs = coeffs

    # -- constructors ----------------------------------------------------

    @classmethod
    def _make(cls, group, nvars, coeffs: dict) -> "AlgebraElement":
        return cls(group, nvars, {g: p for g, p in coeffs.items() if not p.is_zero})

    @classmethod
    def zero(cls, group: FiniteGroup, nvars: int = None) -> "AlgebraElement":
        return cls(group, nvars or default_nvars(group), {})

    @classmethod
    def from_element(cls, group: FiniteGroup, g: int, nvars: int = None) -> "AlgebraElement":
        nvars = nvars or default_nvars(group)
        return cls(group, nvars, {g: MultiPoly.one(nvars)})

    @classmethod
    def identity(cls, group: FiniteGroup, nvars: int = None) -> "AlgebraElement":
        return cls.from_element(group, group.identity, nvars)

    @classmethod
    def from_scalar(cls, group: FiniteGroup, value, nvars: int = None) -> "AlgebraElement":
        nvars = nvars or default_nvars(group)
        poly = MultiPoly.constant(nvars, value)
        if poly.is_zero:
            return cls.zero(group, nvars)
        return cls(group, nvars, {group.identity: poly})

    @classmethod
    def from_poly(cls, group: FiniteGroup, g: int, poly: MultiPoly) -> "AlgebraElement":
        if poly.is_zero:
            return cls.zero(group, poly.nvars)
        return cls(group, poly.nvars, {g: poly})

    @classmethod
    def from_coeff_map(cls, group: FiniteGroup, coeffs: dict, nvars: int = None) -> "AlgebraElement":
        """Build from {element index: poly | scalar}."""
        nvars = nvars or default_nvars(group)
        out = {}
        for g, v in coeffs.items():
            poly = v if isinstance(v, MultiPoly) else MultiPoly.constant(nvars, v)
            if not poly.is_zero:
                out[g] = poly
        return cls(group, nvars, out)

    # -- ring structure ---------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, _SCALARS):
            return AlgebraElement.from_scalar(self.group, other, self.nvars)
        if isinstance(other, MultiPoly):
            return AlgebraElement.from_poly(self.group, self.group.identity, other)
        if isinstance(other, AlgebraElement):
            if other.group is not self.group:
                raise GroupMismatch("elements belong to different groups")
            if other.nvars != self.nvars:
                raise GroupMismatch(
                    f"variable counts differ: {self.nvars} vs {other.nvars}"
                )
            return other
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        coeffs = dict(self.coeffs)
        for g, p in other.coeffs.items():
            cur = coeffs.get(g)
            s = p if cur is None else cur + p
            if s.is_zero:
                coeffs.pop(g, None)
            else:
                coeffs[g] = s
        return AlgebraElement(self.group, self.nvars, coeffs)

    __radd__ = __add__

    def __neg__(self):
        return AlgebraElement(self.group, self.nvars,
                              {g: -p for g, p in self.coeffs.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        """Convolution product; the coefficient of g collects all uv = g."""
        if isinstance(other, _SCALARS + (MultiPoly,)):
            return self.scale(other)
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        other = self._coerce(other)
        table = self.group.table
        acc: dict = {}
        for u, pu in self.coeffs.items():
            row = table[u]
            for v, pv in other.coeffs.items():
                g = row[v]
                prod = pu * pv
                cur = acc.get(g)
                acc[g] = prod if cur is None else cur + prod
        return AlgebraElement._make(self.group, self.nvars, acc)

    def __rmul__(self, other):
        if isinstance(other, _SCALARS + (MultiPoly,)):
            return self.scale(other)
        return NotImplemented

    def scale(self, value) -> "AlgebraElement":
        """Multiply every coefficient by a scalar or (central) polynomial."""
        if isinstance(value, MultiPoly):
            if value.nvars != self.nvars:
                raise GroupMismatch("scaling polynomial uses a different variable count")
            return AlgebraElement._make(
                self.group, self.nvars,
                {g: p * value for g, p in self.coeffs.items()})
        return AlgebraElement._make(
            self.group, self.nvars,
            {g: p.scale(value) for g, p in self.coeffs.items()})

    def mul_element_left(self, g: int) -> "AlgebraElement":
        """g * self, as a pure index remap."""
        table = self.group.table
        return AlgebraElement(self.group, self.nvars,
                              {table[g][h]: p for h, p in self.coeffs.items()})

    def mul_element_right(self, g: int) -> "AlgebraElement":
        """self * g, as a pure index remap."""
        table = self.group.table
        return AlgebraElement(self.group, self.nvars,
                              {table[h][g]: p for h, p in self.coeffs.items()})

    def conjugate_by(self, g: int) -> "AlgebraElement":
        """g^{-1} * self * g."""
        G = self.group
        gi = G.inv(g)
        return AlgebraElement(
            G, self.nvars,
            {G.mul(G.mul(gi, h), g): p for h, p in self.coeffs.items()})

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise ValueError("negative powers are not defined here")
        result = AlgebraElement.identity(self.group, self.nvars)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # -- queries ----------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def support(self) -> tuple[int, ...]:
        return tuple(sorted(self.coeffs))

    def coefficient(self, g: int) -> MultiPoly:
        return self.coeffs.get(g, MultiPoly.zero(self.nvars))

    def is_numeric(self) -> bool:
        return all(p.is_constant for p in self.coeffs.values())

    def augmentation(self) -> MultiPoly:
        """The image under the algebra map sending every group element to 1."""
        total = MultiPoly.zero(self.nvars)
        for p in self.coeffs.values():
            total = total + p
        return total

    def supported_on(self, H: SubgroupHandle) -> bool:
        return all(g in H for g in self.coeffs)

    def restrict(self, H: SubgroupHandle) -> "AlgebraElement":
        """Checked cast to the subgroup's algebra (same indices, same data)."""
        if not self.supported_on(H):
            outside = [g for g in self.support() if g not in H]
            raise NotSupportedOnSubgroup(
                f"coefficients on elements {outside} lie outside the subgroup"
            )
        return self

    def is_central(self, method: str = "commutator") -> bool:
        """Whether the element lies in the center of the algebra.

        ``commutator`` tests g*a = a*g for every group element; ``classes``
        tests that coefficients are constant on conjugacy classes.  ``both``
        cross-checks the two criteria.
        """
        if method == "both":
            a = self.is_central("commutator")
            b = self.is_central("classes")
            if a != b:  # pragma: no cover - the criteria are equivalent
                raise AssertionError("centrality criteria disagree")
            return a
        if method == "commutator":
            for g in self.group.elements():
                basis = AlgebraElement.from_element(self.group, g, self.nvars)
                if basis * self != self * basis:
                    return False
            return True
        if method == "classes":
            for cls_ in self.group.conjugacy_classes():
                first = self.coefficient(cls_[0])
                if any(self.coefficient(x) != first for x in cls_[1:]):
                    return False
            return True
        raise ValueError(f"unknown centrality method {method!r}")

    # -- comparison and rendering ------------------------------------------

    def __eq__(self, other):
        if isinstance(other, _SCALARS + (MultiPoly,)):
            other = self._coerce(other)
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return (self.group is other.group and self.nvars == other.nvars
                and self.coeffs == other.coeffs)

    __hash__ = None

    def render(self) -> str:
        if not self.coeffs:
            return "0"
        names = self.group.names
        return " + ".join(f"({self.coeffs[g].render()})*{names[g]}"
                          for g in sorted(self.coeffs))

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"AlgebraElement({self.render()!r})"

    def json_obj(self) -> dict:
        return {self.group.names[g]: self.coeffs[g].json_obj()
                for g in sorted(self.coeffs)}


def generic_element(G: FiniteGroup, *, nvars: int = None, var_base: int = 0) -> AlgebraElement:
    """The formal sum of every group element weighted by its own variable.

    ``var_base`` shifts the variable block so two independent symbolic
    elements can coexist in one (wider) polynomial ring.
    """
    nvars = nvars or default_nvars(G)
    coeffs = {g: MultiPoly.variable(nvars, var_base + g) for g in G.elements()}
    return AlgebraElement(G, nvars, coeffs)


class AlgebraMatrix:
    """A square matrix with AlgebraElement entries over a common group."""

    __slots__ = ("group", "nvars", "size", "rows")

    def __init__(self, group: FiniteGroup, nvars: int, rows):
        rows = tuple(tuple(row) for row in rows)
        size = len(rows)
        for row in rows:
            if len(row) != size:
                raise SizeMismatch("matrix is not square")
            for entry in row:
                if entry.group is not group:
                    raise GroupMismatch("entry belongs to a different group")
                if entry.nvars != nvars:
                    raise GroupMismatch("entry uses a different variable count")
        self.group = group
        self.nvars = nvars
        self.size = size
        self.rows = rows

    # -- constructors -------------------------------------------------------

    @classmethod
    def identity(cls, group: FiniteGroup, size: int, nvars: int = None) -> "AlgebraMatrix":
        nvars = nvars or default_nvars(group)
        one = AlgebraElement.identity(group, nvars)
        zero = AlgebraElement.zero(group, nvars)
        return cls(group, nvars,
                   [[one if i == j else zero for j in range(size)] for i in range(size)])

    @classmethod
    def zero(cls, group: FiniteGroup, size: int, nvars: int = None) -> "AlgebraMatrix":
        nvars = nvars or default_nvars(group)
        zero = AlgebraElement.zero(group, nvars)
        return cls(group, nvars, [[zero] * size for _ in range(size)])

    @classmethod
    def from_blocks(cls, blocks) -> "AlgebraMatrix":
        """Assemble from a square array of equal-size square blocks."""
        r = len(blocks)
        bs = blocks[0][0].size
        group = blocks[0][0].group
        nvars = blocks[0][0].nvars
        rows = []
        for bi in range(r):
            for i in range(bs):
                row = []
                for bj in range(r):
                    blk = blocks[bi][bj]
                    if blk.size != bs:
                        raise SizeMismatch("blocks have mixed sizes")
                    row.extend(blk.rows[i])
                rows.append(row)
        return cls(group, nvars, rows)

    def block(self, i: int, j: int, block_size: int) -> "AlgebraMatrix":
        """The (i, j) block, counting in square blocks of the given size."""
        rows = [self.rows[i * block_size + a][j * block_size:(j + 1) * block_size]
                for a in range(block_size)]
        return AlgebraMatrix(self.group, self.nvars, rows)

    # -- arithmetic -----------------------------------------------------------

    def _check(self, other: "AlgebraMatrix"):
        if self.group is not other.group:
            raise GroupMismatch("matrices over different groups")
        if self.nvars != other.nvars:
            raise GroupMismatch("matrices use different variable counts")
        if self.size != other.size:
            raise SizeMismatch(f"sizes differ: {self.size} vs {other.size}")

    def __add__(self, other):
        if not isinstance(other, AlgebraMatrix):
            return NotImplemented
        self._check(other)
        return AlgebraMatrix(
            self.group, self.nvars,
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)])

    def __sub__(self, other):
        if not isinstance(other, AlgebraMatrix):
            return NotImplemented
        self._check(other)
        return AlgebraMatrix(
            self.group, self.nvars,
            [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)])

    def __neg__(self):
        return AlgebraMatrix(self.group, self.nvars,
                             [[-a for a in row] for row in self.rows])

    def __mul__(self, other):
        if not isinstance(other, AlgebraMatrix):
            return NotImplemented
        self._check(other)
        cols = list(zip(*other.rows))
        out = []
        for i in range(self.size):
            row = []
            for j in range(self.size):
                acc = AlgebraElement.zero(self.group, self.nvars)
                for a, b in zip(self.rows[i], cols[j]):
                    if a.coeffs and b.coeffs:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return AlgebraMatrix(self.group, self.nvars, out)

    def scale_left(self, element: AlgebraElement) -> "AlgebraMatrix":
        """Multiply every entry by an algebra element on the left."""
        return self.map_entries(lambda a: element * a)

    def scale_right(self, element: AlgebraElement) -> "AlgebraMatrix":
        return self.map_entries(lambda a: a * element)

    def map_entries(self, fn) -> "AlgebraMatrix":
        return AlgebraMatrix(self.group, self.nvars,
                             [[fn(a) for a in row] for row in self.rows])

    def mul_element_left(self, g: int) -> "AlgebraMatrix":
        return self.map_entries(lambda a: a.mul_element_left(g))

    def mul_element_right(self, g: int) -> "AlgebraMatrix":
        return self.map_entries(lambda a: a.mul_element_right(g))

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise ValueError("negative matrix powers are not defined here")
        result = AlgebraMatrix.identity(self.group, self.size, self.nvars)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # -- queries -----------------------------------------------------------

    def trace(self) -> AlgebraElement:
        acc = AlgebraElement.zero(self.group, self.nvars)
        for i in range(self.size):
            acc = acc + self.rows[i][i]
        return acc

    def is_supported_on(self, H: SubgroupHandle) -> bool:
        return all(a.supported_on(H) for row in self.rows for a in row)

    def is_numeric(self) -> bool:
        return all(a.is_numeric() for row in self.rows for a in row)

    @property
    def is_zero(self) -> bool:
        return all(a.is_zero for row in self.rows for a in row)

    def __eq__(self, other):
        if not isinstance(other, AlgebraMatrix):
            return NotImplemented
        return (self.group is other.group and self.size == other.size
                and self.nvars == other.nvars and self.rows == other.rows)

    __hash__ = None

    def render(self) -> str:
        return "\n".join("[" + ", ".join(a.render() for a in row) + "]"
                         for row in self.rows)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"<AlgebraMatrix {self.size}x{self.size} over {self.group!r}>"
