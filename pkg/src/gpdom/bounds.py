"""Closed-form upper bounds and exact domination numbers of P(n, k).

Everything here is pure integer arithmetic.  ``ck_upper_bound`` is the
piecewise bound met by the explicit sets in :mod:`gpdom.constructions`;
``prior_upper_bound`` is the earlier bound it improves on.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exceptions import UnsupportedParams

__all__ = [
    "KnownValue",
    "ceil_div",
    "prior_upper_bound",
    "ck_upper_bound",
    "ck_alpha",
    "p6k_size",
    "known_gamma",
    "known_gamma_detail",
]


def ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def prior_upper_bound(c: int, k: int) -> int:
    """Earlier upper bound on the domination number of P(ck, k), keyed on c mod 3."""
    if c < 3 or k < 1:
        raise UnsupportedParams(f"prior bound needs c >= 3 and k >= 1, got c={c}, k={k}")
    five = ceil_div(5 * k, 3)
    if c % 3 == 0:
        return (c // 3) * five
    base = ceil_div(c, 3) * five - ceil_div(2 * k, 3)
    if c % 3 == 1:
        return base
    return base + ceil_div(k, 3)


def ck_alpha(c: int, k: int) -> int:
    return 0 if k % 2 else c // 4


def ck_upper_bound(c: int, k: int) -> int:
    """Upper bound on the domination number of P(ck, k) for c >= 3 and k >= 3.

    Examples
    --------
    >>> ck_upper_bound(4, 3), ck_upper_bound(4, 4), ck_upper_bound(7, 4)
    (6, 9, 16)
    """
    if c < 3 or k < 3:
        raise UnsupportedParams(f"bound needs c >= 3 and k >= 3, got c={c}, k={k}")
    n = c * k
    a = ck_alpha(c, k)
    r = c % 4
    if r == 0:
        return n // 2 + a
    if r in (1, 2) and k % 2 == 0:
        return n // 2 + k // 2 - 1 + a
    if r == 1:
        return (n - 1) // 2 + (k + 1) // 2 + a
    if r == 2:
        if k % 4 == 1:
            return n // 2 + (k + 1) // 2 + a
        return n // 2 + (k - 1) // 2 + a
    if k in (4, 8):
        return n // 2 + k // 4 + a
    return n // 2 + k // 4 + 1 + a


def p6k_size(k: int) -> int:
    return ceil_div(10 * k, 3)


@dataclass(frozen=True)
class KnownValue:
    """An exact domination number with its provenance.

    ``quoted`` marks values taken second-hand from earlier literature rather
    than proved alongside the constructions in this package.
    """

    value: int
    source: str
    quoted: bool


def _candidates(n: int, k: int):
    # Proved results first so they win when several formulas apply.
    if n == 4 * k:
        yield KnownValue(2 * k if k % 2 else 2 * k + 1, "p4k", False)
    if n == 5 * k:
        yield KnownValue(3 * k, "p5k", False)
    if n == 6 * k:
        yield KnownValue(p6k_size(k) + (1 if k == 2 else 0), "p6k", False)
    if n % 4 == 0 and k % 2 == 1:
        yield KnownValue(n // 2, "efficient", True)
    if k == 1:
        if n % 4 == 2:
            yield KnownValue(n // 2 + 1, "quoted-k1", True)
        else:
            yield KnownValue(ceil_div(n, 2), "quoted-k1", True)
    if k == 2:
        yield KnownValue(ceil_div(3 * n, 5), "quoted-k2", True)
    if k == 3:
        if n % 4 == 3 and n != 11:
            yield KnownValue(ceil_div(n, 2) + 1, "quoted-k3", True)
        elif n % 4 == 2:
            yield KnownValue(n // 2 + 1, "quoted-k3", True)


def known_gamma_detail(n: int, k: int) -> KnownValue | None:
    """Exact value with provenance, or None when no formula covers (n, k).

    P(3k, k) is deliberately absent.
    """
    return next(_candidates(n, k), None)


def all_known_values(n: int, k: int) -> list[KnownValue]:
    return list(_candidates(n, k))


def known_gamma(n: int, k: int) -> int | None:
    """Exact domination number of P(n, k) when a closed form is known.

    >>> known_gamma(25, 5), known_gamma(12, 2), known_gamma(9, 3)
    (15, 8, None)
    """
    kv = known_gamma_detail(n, k)
    return None if kv is None else kv.value
