"""Finite groups as validated Cayley tables, plus subgroup/coset machinery.

Elements are the integers ``0 .. order-1`` and ``table[i][j]`` is the index
of ``g_i * g_j``.  Everything downstream (group algebras, regular
representations, determinants) addresses elements through these indices.

The builtin catalog covers cyclic groups and their direct products, dihedral
groups, symmetric groups up to S4, and the quaternion group of order 8, each
with a documented canonical element ordering.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass

from .cyclotomic import Cyclotomic, root_of_unity
from .errors import (
    InvalidTransversal,
    NotAbelian,
    NotAGroup,
    NotNormal,
    OrderCapExceeded,
    UnknownCatalogKey,
)

#: Associativity validation is O(n^3); above this order it must be asked for.
ASSOCIATIVITY_CHECK_CAP = 64


class FiniteGroup:
    """A finite group given by its Cayley table.

    The table must be a Latin square with a two-sided identity and, unless
    explicitly skipped for a trusted fixture, associative.  By default the
    O(n^3) associativity scan runs only for orders up to
    ``ASSOCIATIVITY_CHECK_CAP``; pass ``check_associativity=True`` to force it
    or ``False`` to skip it.  Instances are immutable.
    """

    __slots__ = ("order", "table", "identity", "inverses", "names",
                 "catalog_key", "_classes")

    def __init__(self, table, names=None, *, check_associativity=None,
                 catalog_key=None):
        table = tuple(tuple(int(v) for v in row) for row in table)
        n = len(table)
        if n == 0:
            raise NotAGroup("empty table")
        for i, row in enumerate(table):
            if len(row) != n:
                raise NotAGroup(f"row {i} has length {len(row)}, expected {n}")
        full = frozenset(range(n))
        for i, row in enumerate(table):
            if frozenset(row) != full:
                raise NotAGroup(f"row {i} is not a permutation of 0..{n - 1}")
        for j in range(n):
            if frozenset(table[i][j] for i in range(n)) != full:
                raise NotAGroup(f"column {j} is not a permutation of 0..{n - 1}")

        identity = None
        for e in range(n):
            if all(table[e][j] == j and table[j][e] == j for j in range(n)):
                identity = e
                break
        if identity is None:
            raise NotAGroup("no two-sided identity element")

        inverses = [None] * n
        for i in range(n):
            j = table[i].index(identity)
            if table[j][i] != identity:
                raise NotAGroup(f"element {i} has no two-sided inverse")
            inverses[i] = j

        if check_associativity is None:
            check_associativity = n <= ASSOCIATIVITY_CHECK_CAP
        if check_associativity:
            for a in range(n):
                ta = table[a]
                for b in range(n):
                    ab = ta[b]
                    tb = table[b]
                    for c in range(n):
                        if table[ab][c] != ta[tb[c]]:
                            raise NotAGroup(
                                f"associativity fails at triple ({a}, {b}, {c})"
                            )

        if names is None:
            names = [f"g{i}" for i in range(n)]
        else:
            names = [str(s) for s in names]
            if len(names) != n:
                raise NotAGroup("names array length does not match the order")
            if len(set(names)) != n:
                raise NotAGroup("element names are not unique")

        self.order = n
        self.table = table
        self.identity = identity
        self.inverses = tuple(inverses)
        self.names = tuple(names)
        self.catalog_key = catalog_key
        self._classes = None

    # ------------------------------------------------------------------
    # element arithmetic

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverses[a]

    def conj(self, g: int, x: int) -> int:
        """g * x * g^{-1}."""
        return self.table[self.table[g][x]][self.inverses[g]]

    def elements(self) -> range:
        return range(self.order)

    def element_order(self, g: int) -> int:
        k, cur = 1, g
        while cur != self.identity:
            cur = self.table[cur][g]
            k += 1
        return k

    def power(self, g: int, k: int) -> int:
        if k < 0:
            return self.power(self.inverses[g], -k)
        out = self.identity
        for _ in range(k):
            out = self.table[out][g]
        return out

    # ------------------------------------------------------------------
    # structure

    def is_abelian(self) -> bool:
        t = self.table
        return all(t[a][b] == t[b][a]
                   for a in range(self.order) for b in range(a + 1, self.order))

    def conjugacy_classes(self) -> tuple[tuple[int, ...], ...]:
        if self._classes is None:
            seen = [False] * self.order
            classes = []
            for x in range(self.order):
                if seen[x]:
                    continue
                orbit = sorted({self.conj(g, x) for g in range(self.order)})
                for y in orbit:
                    seen[y] = True
                classes.append(tuple(orbit))
            self._classes = tuple(classes)
        return self._classes

    def subgroup(self, gens) -> "SubgroupHandle":
        """The smallest subgroup containing the given generators."""
        gens = sorted(set(int(g) for g in gens))
        for g in gens:
            if not 0 <= g < self.order:
                raise ValueError(f"generator {g} out of range")
        # Positive words in the generators already form a subgroup here:
        # finiteness supplies inverses.
        elems = {self.identity}
        frontier = [self.identity]
        while frontier:
            cur = frontier.pop()
            for g in gens:
                nxt = self.table[cur][g]
                if nxt not in elems:
                    elems.add(nxt)
                    frontier.append(nxt)
        return SubgroupHandle(self, tuple(sorted(elems)), _checked=True)

    def trivial_subgroup(self) -> "SubgroupHandle":
        return SubgroupHandle(self, (self.identity,), _checked=True)

    def full_subgroup(self) -> "SubgroupHandle":
        return SubgroupHandle(self, tuple(range(self.order)), _checked=True)

    def center(self) -> "SubgroupHandle":
        t = self.table
        elems = tuple(z for z in range(self.order)
                      if all(t[z][g] == t[g][z] for g in range(self.order)))
        return SubgroupHandle(self, elems, _checked=True)

    def derived_subgroup(self) -> "SubgroupHandle":
        """Subgroup generated by all commutators g^-1 h^-1 g h."""
        comms = set()
        for g in range(self.order):
            for h in range(self.order):
                c = self.mul(self.mul(self.inverses[g], self.inverses[h]),
                             self.mul(g, h))
                comms.add(c)
        return self.subgroup(comms)

    def __repr__(self) -> str:
        key = f" {self.catalog_key}" if self.catalog_key else ""
        return f"<FiniteGroup{key} order={self.order}>"


class SubgroupHandle:
    """A subgroup of a parent group, stored as a sorted element tuple."""

    __slots__ = ("parent", "elements", "_set")

    def __init__(self, parent: FiniteGroup, elements, *, _checked=False):
        elements = tuple(sorted(set(int(e) for e in elements)))
        if not _checked:
            if parent.identity not in elements:
                raise NotAGroup("subgroup does not contain the identity")
            eset = set(elements)
            for a in elements:
                if parent.inverses[a] not in eset:
                    raise NotAGroup(f"subgroup not closed under inverse of {a}")
                for b in elements:
                    if parent.table[a][b] not in eset:
                        raise NotAGroup(
                            f"subgroup not closed under product ({a}, {b})"
                        )
        self.parent = parent
        self.elements = elements
        self._set = frozenset(elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def index(self) -> int:
        return self.parent.order // len(self.elements)

    def __contains__(self, g: int) -> bool:
        return g in self._set

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __eq__(self, other):
        if not isinstance(other, SubgroupHandle):
            return NotImplemented
        return self.parent is other.parent and self.elements == other.elements

    __hash__ = None

    def is_abelian(self) -> bool:
        t = self.parent.table
        return all(t[a][b] == t[b][a]
                   for a in self.elements for b in self.elements if a < b)

    def is_normal(self) -> bool:
        G = self.parent
        return all(G.conj(g, h) in self._set
                   for g in range(G.order) for h in self.elements)

    def exponent(self) -> int:
        out = 1
        for h in self.elements:
            k = self.parent.element_order(h)
            out = out * k // _gcd(out, k)
        return out

    def __repr__(self) -> str:
        return f"<SubgroupHandle order={self.order} of {self.parent!r}>"


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


class Transversal:
    """Left coset representatives of a subgroup, identity first.

    ``lookup[g] = (i, h)`` decomposes every covered element as
    ``g = reps[i] * h`` with ``h`` in the subgroup.  The cosets must tile the
    ambient set exactly.
    """

    __slots__ = ("subgroup", "reps", "ambient", "lookup")

    def __init__(self, subgroup: SubgroupHandle, reps, ambient: SubgroupHandle = None):
        G = subgroup.parent
        if ambient is None:
            ambient = G.full_subgroup()
        reps = tuple(int(r) for r in reps)
        if not reps or reps[0] != G.identity:
            raise InvalidTransversal("the first representative must be the identity")
        lookup = {}
        for i, r in enumerate(reps):
            if r not in ambient:
                raise InvalidTransversal(f"representative {r} lies outside the ambient set")
            for h in subgroup.elements:
                g = G.table[r][h]
                if g in lookup:
                    raise InvalidTransversal(
                        f"cosets of representatives {reps[lookup[g][0]]} and {r} overlap"
                    )
                lookup[g] = (i, h)
        if len(lookup) != ambient.order:
            raise InvalidTransversal("cosets do not cover the ambient set")
        self.subgroup = subgroup
        self.reps = reps
        self.ambient = ambient
        self.lookup = lookup

    def __len__(self) -> int:
        return len(self.reps)

    def coset_of(self, g: int) -> int:
        return self.lookup[g][0]

    def __repr__(self) -> str:
        return f"<Transversal reps={list(self.reps)}>"


# ----------------------------------------------------------------------
# construction and I/O


def make_group_from_table(table, names=None, *, check_associativity=None) -> FiniteGroup:
    """Validate a Cayley table given as a square array of indices."""
    return FiniteGroup(table, names, check_associativity=check_associativity)


def load_group_json(source) -> FiniteGroup:
    """Load a group from the documented JSON form.

    The document is ``{"order": n, "table": [[...]], "names": [...]}`` with
    0-based indices; the identity is inferred.  ``source`` may be a path, a
    JSON string or an already-parsed dict.
    """
    if isinstance(source, dict):
        doc = source
    else:
        text = str(source)
        if text.lstrip().startswith("{"):
            doc = json.loads(text)
        else:
            with open(text, "r", encoding="utf-8") as fh:
                doc = json.load(fh)
    if "table" not in doc:
        raise NotAGroup("JSON document has no 'table' field")
    table = doc["table"]
    if "order" in doc and len(table) != doc["order"]:
        raise NotAGroup("declared order does not match the table size")
    return make_group_from_table(table, doc.get("names"))


# ----------------------------------------------------------------------
# catalog


def cyclic_group(n: int) -> FiniteGroup:
    """Z/n with table[i][j] = (i + j) mod n."""
    if n < 1:
        raise UnknownCatalogKey(f"cyclic order must be positive, got {n}")
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    return FiniteGroup(table, [str(i) for i in range(n)],
                       catalog_key=f"cyclic:{n}")


def product_of_cyclics(orders) -> FiniteGroup:
    """Direct product of cyclic groups; indices are mixed-radix tuples.

    The last factor varies fastest: for orders (2, 3) the element (a, b)
    has index 3*a + b.
    """
    orders = [int(d) for d in orders]
    if not orders or any(d < 1 for d in orders):
        raise UnknownCatalogKey(f"invalid cyclic orders {orders}")
    tuples = list(itertools.product(*[range(d) for d in orders]))
    pos = {t: i for i, t in enumerate(tuples)}
    table = [[pos[tuple((a + b) % d for a, b, d in zip(t1, t2, orders))]
              for t2 in tuples] for t1 in tuples]
    names = ["(" + ",".join(map(str, t)) + ")" for t in tuples]
    key = "cyclic:" + "x".join(map(str, orders))
    return FiniteGroup(table, names, catalog_key=key)


def dihedral_group(n: int) -> FiniteGroup:
    """Dihedral group of order 2n; index a + n*b encodes r^a s^b.

    The defining relation is s r = r^{-1} s, so
    (r^a s^b)(r^c s^d) = r^{a + (-1)^b c} s^{b + d}.
    """
    if n < 1:
        raise UnknownCatalogKey(f"dihedral parameter must be positive, got {n}")

    def idx(a, b):
        return a % n + n * (b % 2)

    table = []
    for i in range(2 * n):
        a, b = i % n, i // n
        row = []
        for j in range(2 * n):
            c, d = j % n, j // n
            row.append(idx(a + (c if b == 0 else -c), b + d))
        table.append(row)
    names = []
    for b in range(2):
        for a in range(n):
            stem = "e" if a == 0 else ("r" if a == 1 else f"r{a}")
            if b:
                stem = "s" if a == 0 else stem + "s"
            names.append(stem)
    return FiniteGroup(table, names, catalog_key=f"dihedral:{n}")


def symmetric_group(n: int) -> FiniteGroup:
    """S_n with elements the permutations of 0..n-1 in lexicographic order.

    The product p*q is the composition "apply q, then p".
    """
    if not 1 <= n <= 6:
        raise UnknownCatalogKey(f"symmetric group supported for n <= 6, got {n}")
    perms = list(itertools.permutations(range(n)))
    pos = {p: i for i, p in enumerate(perms)}
    table = [[pos[tuple(p[q[k]] for k in range(n))] for q in perms] for p in perms]
    names = ["(" + "".join(map(str, p)) + ")" for p in perms]
    return FiniteGroup(table, names, catalog_key=f"sym:{n}",
                       check_associativity=(len(perms) <= ASSOCIATIVITY_CHECK_CAP))


def quaternion_group() -> FiniteGroup:
    """The quaternion group {1, -1, i, -i, j, -j, k, -k} in that index order."""
    units = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
    axis = {0: "1", 1: "i", 2: "j", 3: "k"}
    axis_pos = {v: k for k, v in axis.items()}

    def split(idx):
        sign = -1 if idx % 2 else 1
        return sign, axis[idx // 2]

    def join(sign, ax):
        return axis_pos[ax] * 2 + (0 if sign == 1 else 1)

    base = {
        ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
        ("i", "1"): (1, "i"), ("j", "1"): (1, "j"), ("k", "1"): (1, "k"),
        ("i", "i"): (-1, "1"), ("j", "j"): (-1, "1"), ("k", "k"): (-1, "1"),
        ("i", "j"): (1, "k"), ("j", "i"): (-1, "k"),
        ("j", "k"): (1, "i"), ("k", "j"): (-1, "i"),
        ("k", "i"): (1, "j"), ("i", "k"): (-1, "j"),
    }
    table = []
    for a in range(8):
        sa, xa = split(a)
        row = []
        for b in range(8):
            sb, xb = split(b)
            sc, xc = base[(xa, xb)]
            row.append(join(sa * sb * sc, xc))
        table.append(row)
    return FiniteGroup(table, units, catalog_key="quaternion8")


def builtin_group(key: str) -> FiniteGroup:
    """Build a catalog group from its key, e.g. 'cyclic:4' or 'sym:3'.

    Keys: ``cyclic:n``, ``cyclic:AxBx...`` (direct product), ``dihedral:n``,
    ``sym:n`` (n <= 4), ``quaternion8``.
    """
    key = key.strip()
    if key == "quaternion8":
        return quaternion_group()
    if ":" in key:
        kind, _, arg = key.partition(":")
        if kind == "cyclic":
            if "x" in arg:
                try:
                    orders = [int(p) for p in arg.split("x")]
                except ValueError:
                    raise UnknownCatalogKey(f"bad cyclic product spec {arg!r}") from None
                return product_of_cyclics(orders)
            if arg.isdigit():
                return cyclic_group(int(arg))
        elif kind == "dihedral" and arg.isdigit():
            return dihedral_group(int(arg))
        elif kind == "sym" and arg.isdigit():
            n = int(arg)
            if n > 4:
                raise UnknownCatalogKey("catalog symmetric groups stop at sym:4")
            return symmetric_group(n)
    raise UnknownCatalogKey(f"unknown catalog key {key!r}")


CATALOG_EXAMPLES = (
    "cyclic:4", "cyclic:2x2", "dihedral:4", "sym:3", "sym:4", "quaternion8",
)


def resolve_subgroup(G: FiniteGroup, spec: str) -> SubgroupHandle:
    """Resolve a CLI subgroup spec: generator indices or a named alias.

    Accepted forms: a comma-separated list of generator indices ("1,2"),
    "trivial", "full", "center", "alt"/"aN" (derived subgroup; the
    alternating subgroup for symmetric groups), "rot" (rotations, dihedral
    catalog groups), and "i"/"j"/"k" for quaternion8.
    """
    text = spec.strip().lower()
    if text in ("trivial", "e"):
        return G.trivial_subgroup()
    if text in ("full", "all", "g"):
        return G.full_subgroup()
    if text == "center":
        return G.center()
    if text == "alt" or (text.startswith("a") and text[1:].isdigit()):
        return G.derived_subgroup()
    key = G.catalog_key or ""
    if text == "rot" and key.startswith("dihedral:"):
        return G.subgroup([1])
    if text in ("i", "j", "k") and key == "quaternion8":
        return G.subgroup([{"i": 2, "j": 4, "k": 6}[text]])
    try:
        gens = [int(p) for p in text.split(",") if p != ""]
    except ValueError:
        raise UnknownCatalogKey(f"cannot interpret subgroup spec {spec!r}") from None
    return G.subgroup(gens)


# ----------------------------------------------------------------------
# cosets and quotients


def left_transversal(G: FiniteGroup, H: SubgroupHandle) -> Transversal:
    """Deterministic transversal: identity first, then greedy by index."""
    return left_transversal_in(G.full_subgroup(), H)


def left_transversal_in(ambient: SubgroupHandle, H: SubgroupHandle) -> Transversal:
    G = ambient.parent
    if H.parent is not G:
        raise ValueError("subgroup belongs to a different group")
    if any(h not in ambient for h in H.elements):
        raise InvalidTransversal("subgroup is not contained in the ambient set")
    covered = set()
    reps = []
    for g in (G.identity,) + ambient.elements:
        if g in covered:
            continue
        if g not in ambient:
            continue
        reps.append(g)
        for h in H.elements:
            covered.add(G.table[g][h])
    return Transversal(H, reps, ambient)


def quotient_group(G: FiniteGroup, H: SubgroupHandle):
    """The quotient by a normal subgroup and the projection map.

    Quotient element i is the coset reps[i]*H for the deterministic
    transversal, so the numbering is consistent with ``left_transversal``.
    Returns ``(Q, projection)`` with ``projection[g]`` the quotient index of
    the coset of g.
    """
    if not H.is_normal():
        raise NotNormal("quotients need a normal subgroup")
    T = left_transversal(G, H)
    proj = tuple(T.coset_of(g) for g in range(G.order))
    r = len(T.reps)
    table = [[proj[G.table[T.reps[i]][T.reps[j]]] for j in range(r)] for i in range(r)]
    names = [f"{G.names[t]}H" for t in T.reps]
    Q = FiniteGroup(table, names)
    return Q, proj


def subgroup_as_group(H: SubgroupHandle):
    """Reindex a subgroup as a standalone group; returns (group, embedding)."""
    G = H.parent
    pos = {g: i for i, g in enumerate(H.elements)}
    table = [[pos[G.table[a][b]] for b in H.elements] for a in H.elements]
    names = [G.names[g] for g in H.elements]
    K = FiniteGroup(table, names)
    return K, H.elements


# ----------------------------------------------------------------------
# abelian structure and characters


@dataclass
class AbelianDecomposition:
    """Invariant-factor coordinates for an abelian subgroup.

    Every element factors uniquely as the product of the generators raised
    to exponents below the matching orders; ``orders`` is decreasing under
    divisibility, so the first entry is the exponent of the subgroup.
    """

    subgroup: SubgroupHandle
    generators: tuple[int, ...]
    orders: tuple[int, ...]
    coordinates: dict

    @property
    def exponent(self) -> int:
        return self.orders[0] if self.orders else 1


def abelian_decomposition(H: SubgroupHandle) -> AbelianDecomposition:
    """Decompose an abelian subgroup as a product of cyclic groups.

    A maximal-order element always generates a direct factor; the remaining
    factors come from recursing on the quotient and correcting each lifted
    generator so its order matches its order in the quotient.
    """
    if not H.is_abelian():
        raise NotAbelian("abelian decomposition needs an abelian subgroup")
    K, embed = subgroup_as_group(H)
    local = _abelian_generators(K)
    G = H.parent
    generators = tuple(embed[g] for g, _ in local)
    orders = tuple(d for _, d in local)
    coords = {}
    for exps in itertools.product(*[range(d) for d in orders]):
        g = G.identity
        for gen, e in zip(generators, exps):
            g = G.mul(g, G.power(gen, e))
        if g in coords:
            raise NotAbelian("decomposition is not a direct product")  # defensive
        coords[g] = exps
    if len(coords) != H.order:
        raise NotAbelian("decomposition does not cover the subgroup")  # defensive
    return AbelianDecomposition(H, generators, orders, coords)


def _abelian_generators(K: FiniteGroup) -> list[tuple[int, int]]:
    if K.order == 1:
        return []
    a = max(K.elements(), key=lambda g: (K.element_order(g), -g))
    d1 = K.element_order(a)
    A = K.subgroup([a])
    if A.order == K.order:
        return [(a, d1)]
    Q, proj = quotient_group(K, A)
    T = left_transversal(K, A)
    out = [(a, d1)]
    for qgen, d in _abelian_generators(Q):
        rep = T.reps[qgen]
        # rep^d lands in <a>; divide out the matching power of a so the
        # corrected lift has order exactly d.
        p = K.power(rep, d)
        s = 0
        cur = K.identity
        while cur != p:
            cur = K.mul(cur, a)
            s += 1
        if s % d:
            raise NotAbelian("inconsistent abelian structure")  # defensive
        corrected = K.mul(rep, K.power(K.inv(a), s // d))
        out.append((corrected, d))
    return out


class Character:
    """A homomorphism from an abelian subgroup into the N-th roots of unity.

    ``chi(h) = zeta_N ** exponents[h]`` with N the exponent of the subgroup;
    exponents add modulo N under the group product.
    """

    __slots__ = ("subgroup", "conductor", "exponents", "_values")

    def __init__(self, subgroup: SubgroupHandle, conductor: int, exponents: dict):
        self.subgroup = subgroup
        self.conductor = conductor
        self.exponents = dict(exponents)
        self._values = {h: root_of_unity(conductor, k)
                        for h, k in self.exponents.items()}

    def value(self, h: int) -> Cyclotomic:
        return self._values[h]

    def value_at_inverse(self, h: int) -> Cyclotomic:
        return self._values[self.subgroup.parent.inv(h)]

    def is_trivial(self) -> bool:
        return all(k == 0 for k in self.exponents.values())

    def __eq__(self, other):
        if not isinstance(other, Character):
            return NotImplemented
        return (self.subgroup == other.subgroup
                and self.conductor == other.conductor
                and self.exponents == other.exponents)

    __hash__ = None

    def __repr__(self) -> str:
        return f"<Character conductor={self.conductor} exponents={self.exponents}>"


def characters(H: SubgroupHandle) -> list[Character]:
    """All |H| characters of an abelian subgroup, in a deterministic order.

    Characters are labelled by coordinate tuples (c_1, ..., c_k) running
    lexicographically; the label sends an element with coordinates (e_i) to
    the exponent sum(c_i * e_i * (N / d_i)) mod N.
    """
    decomp = abelian_decomposition(H)
    N = decomp.exponent
    orders = decomp.orders
    out = []
    for labels in itertools.product(*[range(d) for d in orders]):
        exps = {}
        for h, coord in decomp.coordinates.items():
            exps[h] = sum(c * e * (N // d)
                          for c, e, d in zip(labels, coord, orders)) % N
        out.append(Character(H, N, exps))
    return out


def lift_quotient_character(G: FiniteGroup, projection, qchar: Character) -> Character:
    """Compose a character of a quotient with the projection map."""
    full = G.full_subgroup()
    exps = {g: qchar.exponents[projection[g]] for g in range(G.order)}
    return Character(full, qchar.conductor, exps)


# ----------------------------------------------------------------------
# subgroup enumeration

#: Brute-force subgroup enumeration is exponential; keep it to small groups.
SUBGROUP_ENUMERATION_CAP = 16


def all_subgroups(G: FiniteGroup) -> list[SubgroupHandle]:
    """Every subgroup of a small group, by closure of growing generator sets."""
    if G.order > SUBGROUP_ENUMERATION_CAP:
        raise OrderCapExceeded(
            f"subgroup enumeration is capped at order {SUBGROUP_ENUMERATION_CAP}"
        )
    found = {}
    frontier = [G.trivial_subgroup()]
    found[frozenset(frontier[0].elements)] = frontier[0]
    while frontier:
        H = frontier.pop()
        for g in range(G.order):
            if g in H:
                continue
            K = G.subgroup(set(H.elements) | {g})
            key = frozenset(K.elements)
            if key not in found:
                found[key] = K
                frontier.append(K)
    return sorted(found.values(), key=lambda h: (h.order, h.elements))


def abelian_subgroups(G: FiniteGroup) -> list[SubgroupHandle]:
    return [H for H in all_subgroups(G) if H.is_abelian()]
