"""Exact integer matrices, polynomials, and characteristic polynomials.

Everything here runs on Python's arbitrary-precision integers; no floating
point is involved anywhere.  Characteristic polynomials come from the
Faddeev-LeVerrier recurrence (one matrix product per coefficient, with every
internal division checked for exactness) and determinants from fraction-free
Bareiss elimination.

Polynomials are dense coefficient tuples in ascending order, so
``(c0, c1, c2)`` is ``c0 + c1*x + c2*x**2``.
"""

from __future__ import annotations

import csv
import io
import json
import os
from dataclasses import dataclass
from operator import mul
from typing import Iterable, Sequence

from .errors import (
    BitGrowthExceeded,
    DimensionMismatch,
    InexactDivision,
    InternalExactnessViolation,
    NotSquare,
)

#: Environment variable holding the optional bit-size safety cap.  When set to
#: a positive integer, any intermediate value whose bit length exceeds the cap
#: aborts the computation with :class:`BitGrowthExceeded`; values are never
#: silently truncated.
MAX_BITS_ENV = "PGSPECTRA_MAX_BITS"


def _bit_cap() -> int:
    raw = os.environ.get(MAX_BITS_ENV, "").strip()
    if not raw:
        return 0
    try:
        cap = int(raw)
    except ValueError as exc:
        raise BitGrowthExceeded(f"{MAX_BITS_ENV} must be an integer, got {raw!r}") from exc
    return max(cap, 0)


def _check_growth(cap: int, values: Iterable[int], context: str) -> None:
    if not cap:
        return
    for v in values:
        if v.bit_length() > cap:
            raise BitGrowthExceeded(
                f"{context}: intermediate value needs {v.bit_length()} bits, "
                f"cap is {cap} ({MAX_BITS_ENV})"
            )


# ---------------------------------------------------------------------------
# Matrices
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class IntMatrix:
    """Immutable dense integer matrix stored row-major."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise DimensionMismatch("matrix dimensions must be nonnegative")
        if len(self.entries) != self.rows * self.cols:
            raise DimensionMismatch(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )

    @staticmethod
    def from_rows(rows: Sequence[Sequence[int]]) -> IntMatrix:
        r = len(rows)
        c = len(rows[0]) if r else 0
        flat: list[int] = []
        for row in rows:
            if len(row) != c:
                raise DimensionMismatch("ragged rows")
            flat.extend(int(v) for v in row)
        return IntMatrix(r, c, tuple(flat))

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def to_rows(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def __add__(self, other: IntMatrix) -> IntMatrix:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatch("matrix addition needs equal shapes")
        return IntMatrix(
            self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries))
        )

    def __sub__(self, other: IntMatrix) -> IntMatrix:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatch("matrix subtraction needs equal shapes")
        return IntMatrix(
            self.rows, self.cols, tuple(a - b for a, b in zip(self.entries, other.entries))
        )

    def __rmul__(self, k: int) -> IntMatrix:
        return IntMatrix(self.rows, self.cols, tuple(k * v for v in self.entries))

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.rows:
            raise DimensionMismatch(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        cols = [other.entries[j :: other.cols] for j in range(other.cols)]
        flat: list[int] = []
        for i in range(self.rows):
            r = self.row(i)
            flat.extend(sum(map(mul, r, c)) for c in cols)
        return IntMatrix(self.rows, other.cols, tuple(flat))

    def apply(self, vec: Sequence[int]) -> tuple[int, ...]:
        """Matrix-vector product."""
        if len(vec) != self.cols:
            raise DimensionMismatch("vector length must equal column count")
        return tuple(sum(map(mul, self.row(i), vec)) for i in range(self.rows))

    def trace(self) -> int:
        if self.rows != self.cols:
            raise NotSquare("trace needs a square matrix")
        return sum(self.entries[i * self.cols + i] for i in range(self.rows))

    def transpose(self) -> IntMatrix:
        flat: list[int] = []
        for j in range(self.cols):
            flat.extend(self.entries[j :: self.cols])
        return IntMatrix(self.cols, self.rows, tuple(flat))

    def to_csv(self, labels: Sequence[str] | None = None) -> str:
        """CSV text: one header row of column labels, then integer rows."""
        if labels is None:
            labels = [f"v{j}" for j in range(self.cols)]
        if len(labels) != self.cols:
            raise DimensionMismatch("need one label per column")
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(labels)
        for i in range(self.rows):
            w.writerow(self.row(i))
        return buf.getvalue()

    def to_json_obj(self) -> dict:
        return {
            "rows": self.rows,
            "cols": self.cols,
            "entries": [[str(v) for v in self.row(i)] for i in range(self.rows)],
        }

    @staticmethod
    def from_json_obj(obj: dict) -> IntMatrix:
        rows = [[int(v) for v in row] for row in obj["entries"]]
        m = IntMatrix.from_rows(rows) if rows else IntMatrix(0, int(obj["cols"]), ())
        if (m.rows, m.cols) != (int(obj["rows"]), int(obj["cols"])):
            raise DimensionMismatch("declared shape disagrees with entries")
        return m


def identity(n: int) -> IntMatrix:
    return IntMatrix(n, n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))


def zeros(rows: int, cols: int) -> IntMatrix:
    return IntMatrix(rows, cols, (0,) * (rows * cols))


def ones(rows: int, cols: int) -> IntMatrix:
    """All-ones matrix (the J / 1-vector building block)."""
    return IntMatrix(rows, cols, (1,) * (rows * cols))


def kron(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    """Kronecker product, row-major: block (i,j) is ``a[i,j] * b``."""
    flat: list[int] = []
    for i in range(a.rows):
        arow = a.row(i)
        for bi in range(b.rows):
            brow = b.row(bi)
            for av in arow:
                flat.extend(av * bv for bv in brow)
    return IntMatrix(a.rows * b.rows, a.cols * b.cols, tuple(flat))


def block(grid: Sequence[Sequence[IntMatrix]]) -> IntMatrix:
    """Assemble a matrix from a conforming grid of blocks."""
    if not grid or not grid[0]:
        raise DimensionMismatch("block grid must be nonempty")
    ncols_per_block = [b.cols for b in grid[0]]
    flat: list[int] = []
    total_rows = 0
    for brow in grid:
        if len(brow) != len(ncols_per_block):
            raise DimensionMismatch("ragged block grid")
        h = brow[0].rows
        for b, w in zip(brow, ncols_per_block):
            if b.rows != h:
                raise DimensionMismatch("blocks in a row must share their height")
            if b.cols != w:
                raise DimensionMismatch("blocks in a column must share their width")
        for i in range(h):
            for b in brow:
                flat.extend(b.row(i))
        total_rows += h
    return IntMatrix(total_rows, sum(ncols_per_block), tuple(flat))


# ---------------------------------------------------------------------------
# Polynomials
# ---------------------------------------------------------------------------


def _normalize(coeffs: Iterable[int]) -> tuple[int, ...]:
    out = [int(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class IntPolynomial:
    """Dense integer polynomial; ``coeffs[k]`` multiplies ``x**k``.

    The zero polynomial has an empty coefficient tuple; otherwise the leading
    coefficient is nonzero.
    """

    coeffs: tuple[int, ...] = ()

    @staticmethod
    def from_coeffs(coeffs: Iterable[int]) -> IntPolynomial:
        return IntPolynomial(_normalize(coeffs))

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial conventionally at -1."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_monic(self) -> bool:
        return self.leading == 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(_normalize(out))

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: IntPolynomial) -> IntPolynomial:
        return self + (-other)

    def __mul__(self, other: IntPolynomial) -> IntPolynomial:
        if not self.coeffs or not other.coeffs:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(tuple(out))

    def __pow__(self, k: int) -> IntPolynomial:
        if k < 0:
            raise ValueError("negative polynomial power")
        result = IntPolynomial((1,))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def exact_div(self, divisor: IntPolynomial) -> IntPolynomial:
        return poly_exact_div(self, divisor)

    def to_json_obj(self) -> dict:
        return {"coeffs": [str(c) for c in self.coeffs]}

    @staticmethod
    def from_json_obj(obj: dict) -> IntPolynomial:
        return IntPolynomial.from_coeffs(int(c) for c in obj["coeffs"])

    def pretty(self, var: str = "x") -> str:
        """Human-readable rendering, highest power first."""
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                xk = var if k == 1 else f"{var}^{k}"
                body = xk if mag == 1 else f"{mag}*{xk}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"{sign} {body}")
        return " ".join(parts)


def poly_constant(c: int) -> IntPolynomial:
    return IntPolynomial.from_coeffs((c,))


def x_plus(c: int) -> IntPolynomial:
    """The linear polynomial ``x + c``."""
    return IntPolynomial((c, 1))


def poly_mul(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    return a * b


def poly_exact_div(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Quotient of an exact division over the integers.

    Raises :class:`InexactDivision` if ``b`` does not divide ``a`` exactly
    (including coefficient-level failures, e.g. ``x`` by ``2x``).
    """
    if not b:
        raise InexactDivision("division by the zero polynomial")
    if not a:
        return IntPolynomial()
    if a.degree < b.degree:
        raise InexactDivision(
            f"degree {a.degree} polynomial is not divisible by degree {b.degree}"
        )
    rem = list(a.coeffs)
    dc = b.coeffs
    dlead = dc[-1]
    qdeg = a.degree - b.degree
    quot = [0] * (qdeg + 1)
    for k in range(qdeg, -1, -1):
        lead = rem[k + b.degree]
        if lead % dlead != 0:
            raise InexactDivision(f"coefficient {lead} not divisible by {dlead}")
        t = lead // dlead
        quot[k] = t
        if t:
            for i, c in enumerate(dc):
                rem[k + i] -= t * c
    if any(rem):
        raise InexactDivision("nonzero remainder")
    return IntPolynomial(tuple(quot))


@dataclass(frozen=True)
class FactoredPoly:
    """A polynomial kept as ``prod(base ** mult)`` without expanding."""

    factors: tuple[tuple[IntPolynomial, int], ...]

    def __post_init__(self) -> None:
        for base, mult in self.factors:
            if mult < 1:
                raise ValueError("factor multiplicities must be >= 1")
            if not base:
                raise ValueError("zero polynomial cannot be a factor")

    @staticmethod
    def of(*pairs: tuple[IntPolynomial, int]) -> FactoredPoly:
        """Build a factored form, silently dropping multiplicity-0 factors."""
        return FactoredPoly(tuple((b, m) for b, m in pairs if m != 0))

    @property
    def degree(self) -> int:
        return sum(base.degree * mult for base, mult in self.factors)

    def expand(self) -> IntPolynomial:
        out = IntPolynomial((1,))
        for base, mult in self.factors:
            out = out * base**mult
        return out

    def to_json_obj(self) -> dict:
        return {
            "factors": [
                {"coeffs": [str(c) for c in base.coeffs], "mult": mult}
                for base, mult in self.factors
            ]
        }

    @staticmethod
    def from_json_obj(obj: dict) -> FactoredPoly:
        return FactoredPoly(
            tuple(
                (IntPolynomial.from_coeffs(int(c) for c in f["coeffs"]), int(f["mult"]))
                for f in obj["factors"]
            )
        )

    def pretty(self, var: str = "x") -> str:
        if not self.factors:
            return "1"
        parts = []
        for base, mult in self.factors:
            inner = base.pretty(var)
            parts.append(f"({inner})" + (f"^{mult}" if mult != 1 else ""))
        return " * ".join(parts)


def expand(f: FactoredPoly) -> IntPolynomial:
    return f.expand()


def poly_to_json(p: IntPolynomial) -> str:
    return json.dumps(p.to_json_obj())


def poly_from_json(text: str) -> IntPolynomial:
    return IntPolynomial.from_json_obj(json.loads(text))


# ---------------------------------------------------------------------------
# Characteristic polynomial and determinant
# ---------------------------------------------------------------------------


def char_poly(m: IntMatrix) -> IntPolynomial:
    """Characteristic polynomial ``det(xI - m)`` by Faddeev-LeVerrier.

    The recurrence is ``M_1 = I``; ``c_k = -trace(A @ M_k) / k``;
    ``M_{k+1} = A @ M_k + c_k I``.  Every division by ``k`` must be exact for
    an integer matrix; a nonzero remainder raises
    :class:`InternalExactnessViolation`.
    """
    if m.rows != m.cols:
        raise NotSquare(f"characteristic polynomial needs a square matrix, got {m.rows}x{m.cols}")
    n = m.rows
    if n == 0:
        return IntPolynomial((1,))
    cap = _bit_cap()
    a_rows = [list(m.row(i)) for i in range(n)]
    # c[k] is the coefficient of x**(n - k); c[0] = 1 since det(xI - A) is monic.
    cs = [1]
    work = [[1 if i == j else 0 for j in range(n)] for i in range(n)]  # M_1
    rng = range(n)
    for k in range(1, n + 1):
        cols = list(zip(*work))
        prod = [[sum(map(mul, a_rows[i], cols[j])) for j in rng] for i in rng]
        t = sum(prod[i][i] for i in rng)
        if t % k != 0:
            raise InternalExactnessViolation(
                f"Faddeev-LeVerrier trace {t} not divisible by step {k}"
            )
        ck = -(t // k)
        cs.append(ck)
        _check_growth(cap, (ck,), "char_poly")
        if k < n:
            for i in rng:
                prod[i][i] += ck
            work = prod
    return IntPolynomial(tuple(reversed(cs)))


def determinant(m: IntMatrix) -> int:
    """Determinant by fraction-free Bareiss elimination with row pivoting."""
    if m.rows != m.cols:
        raise NotSquare(f"determinant needs a square matrix, got {m.rows}x{m.cols}")
    n = m.rows
    if n == 0:
        return 1
    cap = _bit_cap()
    a = [list(m.row(i)) for i in range(n)]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            row_i = a[i]
            row_k = a[k]
            aik = row_i[k]
            for j in range(k + 1, n):
                num = pivot * row_i[j] - aik * row_k[j]
                q, r = divmod(num, prev)
                if r:
                    raise InternalExactnessViolation(
                        "Bareiss elimination produced a non-exact division"
                    )
                row_i[j] = q
            row_i[k] = 0
        _check_growth(cap, (pivot,), "determinant")
        prev = pivot
    return sign * a[n - 1][n - 1]
