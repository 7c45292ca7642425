"""Lambda-Stirling and lambda-r-Stirling numbers of both kinds.

Every number is available through two independent routes:

* an explicit route (alternating binomial sum for the second kind,
  coefficient extraction from the expanded rising factorial for the first
  kind), used for single queries;
* a row recurrence, used to tabulate whole triangles in O(n^2).

The recurrences come from multiplying the defining identities by one more
linear factor:

    (x + r) (x)_{k,lam} = (x)_{k+1,lam} + (k lam + r) (x)_{k,lam}
    <x + r>_{n+1,lam}   = <x + r>_{n,lam} (x + r + n lam)

which give ``T(n+1, k) = T(n, k-1) + (k lam + r) T(n, k)`` and
``U(n+1, k) = U(n, k-1) + (n lam + r) U(n, k)``.
"""

from __future__ import annotations

import csv
import enum
import io
import json
import math
import threading
from dataclasses import dataclass
from fractions import Fraction

from .errors import DegenerateLambda
from .exact_core import RationalLike, format_scalar, rising_factorial_poly, scalar


class Kind(str, enum.Enum):
    SECOND = "second"
    FIRST_UNSIGNED = "first_unsigned"
    FIRST_SIGNED = "first_signed"

    @classmethod
    def parse(cls, text: str | Kind) -> Kind:
        if isinstance(text, Kind):
            return text
        aliases = {"s2": cls.SECOND, "s1u": cls.FIRST_UNSIGNED, "s1s": cls.FIRST_SIGNED}
        if text in aliases:
            return aliases[text]
        return cls(text)


@dataclass(frozen=True)
class StirlingQuery:
    kind: Kind
    n: int
    k: int
    r: Fraction = Fraction(0)
    lam: Fraction = Fraction(1)

    def value(self) -> Fraction:
        return stirling_number(self.kind, self.n, self.k, self.r, self.lam)


def _check_indices(n: int, k: int) -> None:
    if n < 0 or k < 0:
        raise ValueError(f"indices must be nonnegative, got n={n}, k={k}")


def stirling2_r(n: int, k: int, r: RationalLike, lam: RationalLike) -> Fraction:
    """{n+r brace k+r}_{r,lam} by the explicit alternating sum.

    The sum itself vanishes for k > n; no special case is taken.
    """
    _check_indices(n, k)
    r, lam = scalar(r), scalar(lam)
    if lam == 0:
        raise DegenerateLambda("the explicit second-kind sum divides by lambda^k")
    total = Fraction(0)
    for l in range(k + 1):
        term = math.comb(k, l) * (l * lam + r) ** n
        total += term if (k - l) % 2 == 0 else -term
    return total / (lam**k * math.factorial(k))


def stirling2(n: int, k: int, lam: RationalLike) -> Fraction:
    """{n brace k}_lam = lam^(n-k) {n brace k}; defined for every lambda."""
    _check_indices(n, k)
    lam = scalar(lam)
    total = 0
    for l in range(k + 1):
        term = math.comb(k, l) * l**n
        total += term if (k - l) % 2 == 0 else -term
    if total == 0:
        return Fraction(0)
    # total != 0 forces k <= n, so the power below is never negative
    return Fraction(total, math.factorial(k)) * lam ** (n - k)


def stirling1_unsigned_r(n: int, k: int, r: RationalLike, lam: RationalLike) -> Fraction:
    """[n+r brack k+r]_{r,lam}: coefficient of x^k in <x + r>_{n,lam}."""
    _check_indices(n, k)
    return rising_factorial_poly(n, lam, r).coeff(k)


def stirling1_signed(n: int, k: int, lam: RationalLike, r: RationalLike = 0) -> Fraction:
    """S_{1,lam}(n, k) = (-1)^(n-k) [n brack k]_lam.

    With ``r != 0`` this is the signed r-analogue, i.e. the coefficient of
    (x + r)^k when (x)_{n,lam} is expanded in powers of x + r.
    """
    value = stirling1_unsigned_r(n, k, r, lam)
    return value if (n - k) % 2 == 0 else -value


def stirling_number(kind: Kind | str, n: int, k: int, r: RationalLike = 0,
                    lam: RationalLike = 1) -> Fraction:
    kind = Kind.parse(kind)
    if kind is Kind.SECOND:
        r, lam = scalar(r), scalar(lam)
        if r == 0:
            return stirling2(n, k, lam)
        return stirling2_r(n, k, r, lam)
    if kind is Kind.FIRST_UNSIGNED:
        return stirling1_unsigned_r(n, k, r, lam)
    return stirling1_signed(n, k, lam, r)


# -- recurrence route -------------------------------------------------------

def _next_row(kind: Kind, n: int, row: list[Fraction], r: Fraction, lam: Fraction) -> list[Fraction]:
    """Row n+1 from row n (0 <= k <= n) by the derived recurrences."""
    out = [Fraction(0)] * (n + 2)
    for k in range(n + 2):
        below = row[k] if k <= n else Fraction(0)
        left = row[k - 1] if k >= 1 else Fraction(0)
        if kind is Kind.SECOND:
            out[k] = left + (k * lam + r) * below
        elif kind is Kind.FIRST_UNSIGNED:
            out[k] = left + (n * lam + r) * below
        else:
            out[k] = left - (n * lam + r) * below
    return out


def recurrence_rows(kind: Kind | str, n_max: int, r: RationalLike, lam: RationalLike) -> list[list[Fraction]]:
    """Rows 0..n_max of the triangle computed purely by recurrence."""
    kind = Kind.parse(kind)
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    r, lam = scalar(r), scalar(lam)
    rows = [[Fraction(1)]]
    for n in range(n_max):
        rows.append(_next_row(kind, n, rows[-1], r, lam))
    return rows


class _RowCache:
    """Lock-protected memo of triangle rows keyed by (kind, r, lambda)."""

    def __init__(self):
        self._lock = threading.Lock()
        self._rows: dict[tuple[Kind, Fraction, Fraction], list[list[Fraction]]] = {}

    def rows(self, kind: Kind, n_max: int, r: Fraction, lam: Fraction) -> list[list[Fraction]]:
        key = (kind, r, lam)
        with self._lock:
            rows = self._rows.setdefault(key, [[Fraction(1)]])
            while len(rows) <= n_max:
                n = len(rows) - 1
                rows.append(_next_row(kind, n, rows[-1], r, lam))
            return [list(row) for row in rows[: n_max + 1]]

    def clear(self) -> None:
        with self._lock:
            self._rows.clear()


_CACHE = _RowCache()


def cached_rows(kind: Kind | str, n_max: int, r: RationalLike, lam: RationalLike) -> list[list[Fraction]]:
    """Memoized recurrence rows; the returned lists are private copies."""
    kind = Kind.parse(kind)
    if n_max < 0:
        return []
    return _CACHE.rows(kind, n_max, scalar(r), scalar(lam))


def clear_cache() -> None:
    _CACHE.clear()


# -- triangles ----------------------------------------------------------------

@dataclass(frozen=True)
class Triangle:
    kind: Kind
    r: Fraction
    lam: Fraction
    n_max: int
    rows: tuple[tuple[Fraction, ...], ...]

    def __getitem__(self, nk: tuple[int, int]) -> Fraction:
        n, k = nk
        if k > n:
            return Fraction(0)
        return self.rows[n][k]

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["n", "k", "value"])
        for n, row in enumerate(self.rows):
            for k, value in enumerate(row):
                writer.writerow([n, k, format_scalar(value)])
        return buf.getvalue()

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "r": format_scalar(self.r),
            "lambda": format_scalar(self.lam),
            "rows": [[format_scalar(v) for v in row] for row in self.rows],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> Triangle:
        data = json.loads(text)
        rows = tuple(tuple(scalar(v) for v in row) for row in data["rows"])
        return cls(Kind.parse(data["kind"]), scalar(data["r"]), scalar(data["lambda"]),
                   len(rows) - 1, rows)


def triangle(kind: Kind | str, n_max: int, r: RationalLike = 0, lam: RationalLike = 1) -> Triangle:
    """Tabulate 0 <= k <= n <= n_max by recurrence, spot-checked by the explicit route."""
    kind = Kind.parse(kind)
    r, lam = scalar(r), scalar(lam)
    if kind is Kind.SECOND and r != 0 and lam == 0:
        raise DegenerateLambda("second-kind r-triangle needs lambda != 0")
    rows = cached_rows(kind, n_max, r, lam)
    k_mid = n_max // 2
    expected = stirling_number(kind, n_max, k_mid, r, lam)
    if rows[n_max][k_mid] != expected:
        raise RuntimeError(
            f"recurrence and explicit routes disagree at ({n_max}, {k_mid}): "
            f"{rows[n_max][k_mid]} != {expected}"
        )
    return Triangle(kind, r, lam, n_max, tuple(tuple(row) for row in rows))
