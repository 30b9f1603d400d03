"""Finite groups of the supported families as explicit Cayley tables.

Every group is a table over element indices ``0..order-1`` with index 0 as
the identity.  Families: cyclic, elementary abelian, dihedral, dicyclic, the
nonabelian group of order ``p*q``, and direct products of any two of these.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InvalidFamilyParameters

# ---------------------------------------------------------------------------
# Number-theoretic plumbing
# ---------------------------------------------------------------------------


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_power_base(n: int) -> int | None:
    """The prime ``p`` when ``n = p**k`` for some ``k >= 1``, else ``None``."""
    if n < 2:
        return None
    p = 2
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            return p if n == 1 else None
        p += 1
    return n


def totient_and_divisors(n: int) -> tuple[int, tuple[int, ...]]:
    """Euler's totient of ``n`` and its proper nontrivial divisors, ascending.

    "Proper nontrivial" excludes both 1 and ``n`` itself.
    """
    if n < 1:
        raise InvalidFamilyParameters(f"totient needs n >= 1, got {n}")
    phi = sum(1 for k in range(1, n + 1) if _gcd(k, n) == 1)
    divisors = tuple(d for d in range(2, n) if n % d == 0)
    return phi, divisors


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


# ---------------------------------------------------------------------------
# Group representation
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GroupFamilySpec:
    """Names a group family and its parameters.

    ``family`` is one of ``cyclic``, ``elementary-abelian``, ``dihedral``,
    ``dicyclic``, ``gpq``, ``direct-product``.  Direct products carry the two
    factor specs in ``factors`` instead of numeric ``params``.
    """

    family: str
    params: tuple[int, ...] = ()
    factors: tuple[GroupFamilySpec, GroupFamilySpec] | None = None

    def describe(self) -> str:
        if self.family == "direct-product" and self.factors is not None:
            return f"({self.factors[0].describe()}) x ({self.factors[1].describe()})"
        return f"{self.family}{list(self.params)}"


@dataclass(frozen=True)
class FiniteGroup:
    """A finite group as an explicit multiplication table.

    ``table[a][b]`` is the product ``a*b``; element 0 is the identity.
    ``spec`` records which family constructor produced the group (used by
    family-specific partitions); hand-built tables may leave it ``None``.
    """

    order: int
    table: tuple[tuple[int, ...], ...]
    identity: int
    inverse: tuple[int, ...]
    labels: tuple[str, ...]
    spec: GroupFamilySpec | None = None

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def power(self, a: int, k: int) -> int:
        if k < 0:
            return self.power(self.inverse[a], -k)
        acc = self.identity
        base = a
        while k:
            if k & 1:
                acc = self.table[acc][base]
            base = self.table[base][base]
            k >>= 1
        return acc


def _finish(
    order: int,
    table: list[list[int]],
    labels: Sequence[str],
    spec: GroupFamilySpec | None,
) -> FiniteGroup:
    tbl = tuple(tuple(row) for row in table)
    inverse = []
    for a in range(order):
        try:
            inverse.append(tbl[a].index(0))
        except ValueError:  # pragma: no cover - guarded by construction
            raise InvalidFamilyParameters(f"element {a} has no inverse") from None
    return FiniteGroup(order, tbl, 0, tuple(inverse), tuple(labels), spec)


# ---------------------------------------------------------------------------
# Family constructors
# ---------------------------------------------------------------------------


def make_cyclic(n: int) -> FiniteGroup:
    """The cyclic group of order ``n`` on ``{0..n-1}`` under addition mod n."""
    if n < 1:
        raise InvalidFamilyParameters(f"cyclic group needs order >= 1, got {n}")
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    labels = [str(i) for i in range(n)]
    return _finish(n, table, labels, GroupFamilySpec("cyclic", (n,)))


def make_elementary_abelian(p: int, n: int) -> FiniteGroup:
    """The elementary abelian group of order ``p**n`` (vectors over GF(p)).

    Element ``i`` is the base-``p`` digit vector of ``i``; addition is
    digitwise mod ``p``.
    """
    if not is_prime(p):
        raise InvalidFamilyParameters(f"elementary abelian group needs a prime p, got {p}")
    if n < 1:
        raise InvalidFamilyParameters(f"elementary abelian group needs n >= 1, got {n}")
    order = p**n
    digits = []
    for i in range(order):
        v, rest = [], i
        for _ in range(n):
            rest, d = divmod(rest, p)
            v.append(d)
        digits.append(v)
    table = []
    for i in range(order):
        di = digits[i]
        row = []
        for j in range(order):
            dj = digits[j]
            acc = 0
            for k in range(n - 1, -1, -1):
                acc = acc * p + (di[k] + dj[k]) % p
            row.append(acc)
        table.append(row)
    labels = ["(" + ",".join(str(d) for d in v) + ")" for v in digits]
    return _finish(order, table, labels, GroupFamilySpec("elementary-abelian", (p, n)))


def make_dihedral(n: int) -> FiniteGroup:
    """The dihedral group of order ``2n``: symmetries of the regular n-gon.

    Element ``i < n`` is the rotation ``a**i``; element ``n + i`` is the
    reflection ``a**i * b``.
    """
    if n < 3:
        raise InvalidFamilyParameters(f"dihedral group needs n >= 3, got {n}")
    order = 2 * n

    def mul(i1: int, e1: int, i2: int, e2: int) -> int:
        i = (i1 + (i2 if e1 == 0 else -i2)) % n
        return (e1 ^ e2) * n + i

    table = [
        [mul(x % n, x // n, y % n, y // n) for y in range(order)] for x in range(order)
    ]
    labels = []
    for i in range(n):
        labels.append("e" if i == 0 else ("a" if i == 1 else f"a{i}"))
    for i in range(n):
        labels.append("b" if i == 0 else ("ab" if i == 1 else f"a{i}b"))
    return _finish(order, table, labels, GroupFamilySpec("dihedral", (n,)))


def make_dicyclic(n: int) -> FiniteGroup:
    """The dicyclic group of order ``4n``.

    Generators ``a`` of order ``2n`` and ``x`` with ``x**2 = a**n`` and
    ``x a x**-1 = a**-1``.  Element ``i < 2n`` is ``a**i``; element
    ``2n + i`` is ``a**i * x``.
    """
    if n < 3:
        raise InvalidFamilyParameters(f"dicyclic group needs n >= 3, got {n}")
    m = 2 * n
    order = 4 * n

    def mul(i1: int, e1: int, i2: int, e2: int) -> int:
        i = (i1 + (i2 if e1 == 0 else -i2) + (n if e1 and e2 else 0)) % m
        return (e1 ^ e2) * m + i

    table = [
        [mul(p % m, p // m, q % m, q // m) for q in range(order)] for p in range(order)
    ]
    labels = []
    for i in range(m):
        labels.append("e" if i == 0 else ("a" if i == 1 else f"a{i}"))
    for i in range(m):
        labels.append("x" if i == 0 else ("ax" if i == 1 else f"a{i}x"))
    return _finish(order, table, labels, GroupFamilySpec("dicyclic", (n,)))


def make_gpq(p: int, q: int) -> FiniteGroup:
    """The nonabelian group of order ``p*q`` for primes ``p < q, p | q-1``.

    Presentation ``a**q = b**p = e``, ``b a b**-1 = a**r`` with ``r`` the
    least integer above 1 satisfying ``r**p = 1 (mod q)``.  Element
    ``i*p + j`` is ``a**i * b**j``.
    """
    if not is_prime(p) or not is_prime(q):
        raise InvalidFamilyParameters(f"gpq needs primes, got p={p}, q={q}")
    if p >= q:
        raise InvalidFamilyParameters(f"gpq needs p < q, got p={p}, q={q}")
    if (q - 1) % p != 0:
        raise InvalidFamilyParameters(
            f"gpq needs p | q-1 for a nonabelian group, got p={p}, q={q}"
        )
    r = next(r for r in range(2, q) if pow(r, p, q) == 1)
    order = p * q

    def mul(i1: int, j1: int, i2: int, j2: int) -> int:
        # (a^i1 b^j1)(a^i2 b^j2) = a^(i1 + r^j1 * i2) b^(j1 + j2)
        return ((i1 + pow(r, j1, q) * i2) % q) * p + (j1 + j2) % p

    table = [
        [mul(u // p, u % p, v // p, v % p) for v in range(order)] for u in range(order)
    ]
    labels = []
    for u in range(order):
        i, j = u // p, u % p
        ai = "" if i == 0 else ("a" if i == 1 else f"a{i}")
        bj = "" if j == 0 else ("b" if j == 1 else f"b{j}")
        labels.append((ai + bj) or "e")
    return _finish(order, table, labels, GroupFamilySpec("gpq", (p, q)))


def direct_product(g: FiniteGroup, h: FiniteGroup) -> FiniteGroup:
    """Direct product with the row-major pairing ``(a, b) -> a*|H| + b``."""
    order = g.order * h.order
    hn = h.order
    table = []
    for a in range(g.order):
        ga = g.table[a]
        for b in range(h.order):
            hb = h.table[b]
            table.append([ga[c] * hn + hb[d] for c in range(g.order) for d in range(h.order)])
    labels = [f"({la},{lb})" for la in g.labels for lb in h.labels]
    spec = None
    if g.spec is not None and h.spec is not None:
        spec = GroupFamilySpec("direct-product", (), (g.spec, h.spec))
    return _finish(order, table, labels, spec)


_FAMILIES = {
    "cyclic": (make_cyclic, 1),
    "elementary-abelian": (make_elementary_abelian, 2),
    "dihedral": (make_dihedral, 1),
    "dicyclic": (make_dicyclic, 1),
    "gpq": (make_gpq, 2),
}


def make_group(spec: GroupFamilySpec) -> FiniteGroup:
    """Build the group a :class:`GroupFamilySpec` describes."""
    if spec.family == "direct-product":
        if spec.factors is None:
            raise InvalidFamilyParameters("direct-product spec needs two factor specs")
        return direct_product(make_group(spec.factors[0]), make_group(spec.factors[1]))
    try:
        ctor, arity = _FAMILIES[spec.family]
    except KeyError:
        raise InvalidFamilyParameters(f"unknown family {spec.family!r}") from None
    if len(spec.params) != arity:
        raise InvalidFamilyParameters(
            f"family {spec.family!r} takes {arity} parameter(s), got {list(spec.params)}"
        )
    return ctor(*spec.params)


# ---------------------------------------------------------------------------
# Element-level queries
# ---------------------------------------------------------------------------


def element_order(g: FiniteGroup, x: int) -> int:
    acc = x
    k = 1
    while acc != g.identity:
        acc = g.table[acc][x]
        k += 1
    return k


def cyclic_subgroup(g: FiniteGroup, x: int) -> tuple[int, ...]:
    """The subgroup generated by ``x``, as an ascending element tuple."""
    seen = [g.identity]
    acc = x
    while acc != g.identity:
        seen.append(acc)
        acc = g.table[acc][x]
    return tuple(sorted(seen))


def cyclic_subgroups(g: FiniteGroup) -> tuple[tuple[int, ...], ...]:
    """All distinct cyclic subgroups, deduplicated, in lexicographic order."""
    return tuple(sorted({cyclic_subgroup(g, x) for x in range(g.order)}))


def order_census(g: FiniteGroup) -> dict[int, int]:
    """Map from element order to the number of elements of that order."""
    census: dict[int, int] = {}
    for x in range(g.order):
        k = element_order(g, x)
        census[k] = census.get(k, 0) + 1
    return dict(sorted(census.items()))


def check_associative(g: FiniteGroup) -> bool:
    """Full triple-scan associativity check; O(order**3), for tests."""
    t = g.table
    rng = range(g.order)
    for a in rng:
        ta = t[a]
        for b in rng:
            if t[ta[b]] != tuple(ta[x] for x in t[b]):
                return False
    return True


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------


def group_to_json_obj(g: FiniteGroup) -> dict:
    return {
        "order": g.order,
        "identity": g.identity,
        "table": [list(row) for row in g.table],
        "labels": list(g.labels),
    }


def group_to_json(g: FiniteGroup) -> str:
    return json.dumps(group_to_json_obj(g))


def group_from_json(text: str) -> FiniteGroup:
    obj = json.loads(text)
    order = int(obj["order"])
    table = [[int(v) for v in row] for row in obj["table"]]
    if len(table) != order or any(len(row) != order for row in table):
        raise InvalidFamilyParameters("table shape disagrees with declared order")
    if int(obj["identity"]) != 0:
        raise InvalidFamilyParameters("serialized groups must use element 0 as identity")
    labels = [str(s) for s in obj.get("labels") or (str(i) for i in range(order))]
    return _finish(order, table, labels, None)
