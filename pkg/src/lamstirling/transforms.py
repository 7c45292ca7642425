"""Orthogonality checks and the Stirling inverse-pair transforms.

Sequences are finite tuples of Fractions indexed from 0. The infinite
``k >= n`` inversion is handled only for eventually-zero sequences, where it
coincides with the finite dual pair :func:`dual_inverse_pair`.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .errors import DegenerateLambda
from .exact_core import RationalLike, scalar
from .stirling import Kind, cached_rows

FiniteSequence = tuple[Fraction, ...]


def _params(r: RationalLike, lam: RationalLike) -> tuple[Fraction, Fraction]:
    r, lam = scalar(r), scalar(lam)
    if lam == 0:
        raise DegenerateLambda("inverse relations need lambda != 0")
    return r, lam


def _both(n_max: int, r: Fraction, lam: Fraction):
    return (cached_rows(Kind.FIRST_UNSIGNED, n_max, r, lam),
            cached_rows(Kind.SECOND, n_max, r, lam))


def _sign(e: int) -> int:
    return -1 if e % 2 else 1


def orthogonality_defect(n: int, l: int, r: RationalLike, lam: RationalLike, side: str = "a") -> Fraction:
    """Orthogonality sum minus the Kronecker delta; exactly 0 when the identity holds.

    side ``"a"``: sum_k (-1)^(n-k) [n+r brack k+r] {k+r brace l+r}
    side ``"b"``: sum_k (-1)^(k-l) [k+r brack l+r] {n+r brace k+r}
    """
    if not 0 <= l <= n:
        raise ValueError(f"need 0 <= l <= n, got l={l}, n={n}")
    r, lam = _params(r, lam)
    first, second = _both(n, r, lam)
    total = Fraction(0)
    if side == "a":
        for k in range(l, n + 1):
            total += _sign(n - k) * first[n][k] * second[k][l]
    elif side == "b":
        for k in range(l, n + 1):
            total += _sign(k - l) * first[k][l] * second[n][k]
    else:
        raise ValueError(f"side must be 'a' or 'b', got {side!r}")
    return total - (1 if n == l else 0)


def stirling2_transform(c: Sequence[RationalLike], r: RationalLike, lam: RationalLike) -> FiniteSequence:
    """a_n = sum_{k<=n} {n+r brace k+r}_{r,lam} c_k."""
    r, lam = _params(r, lam)
    c = [scalar(v) for v in c]
    if not c:
        return ()
    second = cached_rows(Kind.SECOND, len(c) - 1, r, lam)
    return tuple(sum((second[n][k] * c[k] for k in range(n + 1)), Fraction(0))
                 for n in range(len(c)))


def stirling1_inverse_transform(a: Sequence[RationalLike], r: RationalLike, lam: RationalLike) -> FiniteSequence:
    """c_n = sum_{k<=n} (-1)^(n-k) [n+r brack k+r]_{r,lam} a_k."""
    r, lam = _params(r, lam)
    a = [scalar(v) for v in a]
    if not a:
        return ()
    first = cached_rows(Kind.FIRST_UNSIGNED, len(a) - 1, r, lam)
    return tuple(sum((_sign(n - k) * first[n][k] * a[k] for k in range(n + 1)), Fraction(0))
                 for n in range(len(a)))


def _check_length(seq: list, m: int) -> None:
    if len(seq) != m + 1:
        raise ValueError(f"sequence length must be m+1 = {m + 1}, got {len(seq)}")


def dual_inverse_pair(c: Sequence[RationalLike], m: int, r: RationalLike, lam: RationalLike) -> FiniteSequence:
    """a_n = sum_{k=n}^{m} {k+r brace n+r}_{r,lam} c_k."""
    r, lam = _params(r, lam)
    c = [scalar(v) for v in c]
    _check_length(c, m)
    second = cached_rows(Kind.SECOND, m, r, lam)
    return tuple(sum((second[k][n] * c[k] for k in range(n, m + 1)), Fraction(0))
                 for n in range(m + 1))


def dual_inverse_pair_inverse(a: Sequence[RationalLike], m: int, r: RationalLike, lam: RationalLike) -> FiniteSequence:
    """c_n = sum_{k=n}^{m} (-1)^(k-n) [k+r brack n+r]_{r,lam} a_k."""
    r, lam = _params(r, lam)
    a = [scalar(v) for v in a]
    _check_length(a, m)
    first = cached_rows(Kind.FIRST_UNSIGNED, m, r, lam)
    return tuple(sum((_sign(k - n) * first[k][n] * a[k] for k in range(n, m + 1)), Fraction(0))
                 for n in range(m + 1))
