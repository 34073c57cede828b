"""Partition combinatorics and the scalar coefficient families used by the
Pieri rules: phi/psi skew polynomials, phi_r, b_lambda, Gaussian binomials,
the vertical-strip coefficient f, and the N-counts of the t=0 rule.

Partitions are plain tuples of positive ints, weakly decreasing; () is empty.
Integer vectors (Giambelli indices) are plain tuples of ints of any sign.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache

from .exactalg import Poly, RatFunc

Partition = tuple[int, ...]


def check_partition(p) -> Partition:
    p = tuple(int(x) for x in p)
    if any(a < b for a, b in zip(p, p[1:])) or (p and p[-1] < 1):
        raise ValueError(f"not a partition: {p}")
    return p


def size(p: Partition) -> int:
    return sum(p)


def length(p: Partition) -> int:
    return len(p)


def n_stat(p: Partition) -> int:
    """n(lambda) = sum (i-1) lambda_i."""
    return sum(i * part for i, part in enumerate(p))


def conjugate(p: Partition) -> Partition:
    if not p:
        return ()
    cols = [0] * p[0]
    for part in p:
        for j in range(part):
            cols[j] += 1
    return tuple(cols)


def multiplicity(p: Partition, i: int) -> int:
    return sum(1 for part in p if part == i)


def pad(p: Partition, ell: int) -> tuple[int, ...]:
    if len(p) > ell:
        raise ValueError(f"cannot pad {p} to length {ell}")
    return tuple(p) + (0,) * (ell - len(p))


def from_vector(v: tuple[int, ...]) -> Partition | None:
    """Partition of a vector: None if any entry < 0, else sorted positives."""
    if any(x < 0 for x in v):
        return None
    return tuple(sorted((x for x in v if x > 0), reverse=True))


def dominates(p: Partition, q: Partition) -> bool:
    """p >= q in dominance order (same size assumed)."""
    sp = sq = 0
    for i in range(max(len(p), len(q))):
        sp += p[i] if i < len(p) else 0
        sq += q[i] if i < len(q) else 0
        if sp < sq:
            return False
    return True


@lru_cache(maxsize=None)
def partitions_of(n: int, max_part: int | None = None) -> tuple[Partition, ...]:
    if n < 0:
        return ()
    if max_part is None:
        max_part = n
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_upto(n: int) -> list[Partition]:
    out: list[Partition] = []
    for k in range(n + 1):
        out.extend(partitions_of(k))
    return out


# -- strips ------------------------------------------------------------------


def is_horizontal_strip(lam: Partition, nu: Partition) -> bool:
    """True when nu <= lam and lam - nu has at most one box per column."""
    for i in range(len(lam)):
        li = lam[i]
        ni = nu[i] if i < len(nu) else 0
        if ni > li:
            return False
        nxt = lam[i + 1] if i + 1 < len(lam) else 0
        if nxt > ni:  # two boxes in one column
            return False
    return len(nu) <= len(lam)


def is_vertical_strip(lam: Partition, nu: Partition) -> bool:
    """True when nu <= lam and lam - nu has at most one box per row."""
    if len(nu) > len(lam):
        return False
    for i in range(len(lam)):
        li = lam[i]
        ni = nu[i] if i < len(nu) else 0
        if ni > li or li - ni > 1:
            return False
    return True


def horizontal_strips(base: Partition, a: int, direction: str) -> list[Partition]:
    """direction 'up': all lam >= base with lam-base a horizontal a-strip;
    direction 'down': all nu <= base with base-nu a horizontal a-strip."""
    if a < 0:
        return []
    if direction == "up":
        ell = len(base)
        out: list[Partition] = []

        def rec(i: int, remaining: int, acc: list[int]):
            if i == ell:
                # at most one extra row, capped by the last base part
                if remaining == 0:
                    out.append(tuple(acc))
                elif ell == 0 or remaining <= base[ell - 1]:
                    out.append(tuple(acc + [remaining]))
                return
            lo = base[i]
            hi = base[i] + remaining if i == 0 else min(base[i - 1], base[i] + remaining)
            for li in range(lo, hi + 1):
                rec(i + 1, remaining - (li - base[i]), acc + [li])

        rec(0, a, [])
        return sorted(set(out), reverse=True)
    if direction == "down":
        out = []

        def rec_down(i: int, remaining: int, acc: list[int]):
            if i == len(base):
                if remaining == 0:
                    out.append(tuple(x for x in acc if x > 0))
                return
            lo = base[i + 1] if i + 1 < len(base) else 0
            for ni in range(lo, base[i] + 1):
                drop = base[i] - ni
                if drop <= remaining:
                    rec_down(i + 1, remaining - drop, acc + [ni])

        rec_down(0, a, [])
        return sorted(set(out), reverse=True)
    raise ValueError(f"direction must be 'up' or 'down', got {direction!r}")


def vertical_strips(base: Partition, a: int, direction: str) -> list[Partition]:
    """Mirror of horizontal_strips with rows and columns exchanged."""
    if a < 0:
        return []
    return sorted({conjugate(s) for s in horizontal_strips(conjugate(base), a, direction)}, reverse=True)


# -- Pieri coefficient polynomials (all in the indeterminate t) ---------------


def _strip_column_profile(lam: Partition, nu: Partition) -> list[int]:
    lamc, nuc = conjugate(lam), conjugate(nu)
    cols = max(len(lamc), 1)
    return [(lamc[i] if i < len(lamc) else 0) - (nuc[i] if i < len(nuc) else 0) for i in range(cols)]


def phi_skew(lam: Partition, nu: Partition, var: str = "t") -> Poly:
    """phi_{lam/nu}(t) over the column-end set I of the horizontal strip."""
    if not is_horizontal_strip(lam, nu):
        raise ValueError(f"{lam} - {nu} is not a horizontal strip")
    sigma = _strip_column_profile(lam, nu)
    out = Poly.const(var, 1)
    for i, s in enumerate(sigma):
        nxt = sigma[i + 1] if i + 1 < len(sigma) else 0
        if s == 1 and nxt == 0:
            m = multiplicity(lam, i + 1)
            out = out * (Poly.const(var, 1) - Poly.x(var, m))
    return out


def psi_skew(lam: Partition, nu: Partition, var: str = "t") -> Poly:
    """psi_{lam/nu}(t) over the column-start set J of the horizontal strip."""
    if not is_horizontal_strip(lam, nu):
        raise ValueError(f"{lam} - {nu} is not a horizontal strip")
    sigma = _strip_column_profile(lam, nu)
    out = Poly.const(var, 1)
    for j, s in enumerate(sigma):
        nxt = sigma[j + 1] if j + 1 < len(sigma) else 0
        if s == 0 and nxt == 1:
            m = multiplicity(nu, j + 1)
            out = out * (Poly.const(var, 1) - Poly.x(var, m))
    return out


@lru_cache(maxsize=None)
def phi_r(r: int, var: str = "t") -> Poly:
    """phi_r(t) = (1-t)(1-t^2)...(1-t^r); phi_0 = 1."""
    if r < 0:
        raise ValueError("phi_r needs r >= 0")
    out = Poly.const(var, 1)
    for k in range(1, r + 1):
        out = out * (Poly.const(var, 1) - Poly.x(var, k))
    return out


def b_lambda(lam: Partition, var: str = "t") -> Poly:
    out = Poly.const(var, 1)
    for i in set(lam):
        out = out * phi_r(multiplicity(lam, i), var)
    return out


@lru_cache(maxsize=None)
def gauss_binom_plus(n: int, r: int, var: str = "t") -> Poly:
    """[n r]_+(t) = phi_n/(phi_r phi_{n-r}): zero for r < 0 or r > n >= 0."""
    if r < 0:
        return Poly(var)
    if n >= 0 and r > n:
        return Poly(var)
    num = Poly.const(var, 1)
    for j in range(r):
        num = num * (Poly.const(var, 1) - Poly.x(var, n - j))
    rf = RatFunc(num, phi_r(r, var))
    return rf.to_poly()


def f_vertical(mu: Partition, m: int, lam: Partition, var: str = "t") -> Poly:
    """f^lam_{mu,(1^m)}(t): zero unless lam - mu is a vertical m-strip."""
    if size(lam) - size(mu) != m or not is_vertical_strip(lam, mu):
        return Poly(var)
    lamc, muc = conjugate(lam), conjugate(mu)
    out = Poly.const(var, 1)
    for i in range(len(lamc)):
        li = lamc[i]
        li1 = lamc[i + 1] if i + 1 < len(lamc) else 0
        mi = muc[i] if i < len(muc) else 0
        out = out * gauss_binom_plus(li - li1, li - mi, var)
        if out.is_zero():
            return out
    return out


def n_count(mu: Partition, r: int, lam: Partition) -> int:
    """Number of nu with nu -> mu and nu -> lam horizontal strips and
    |mu-nu| + |lam-nu| = r.  Zero on size-parity failure."""
    gap = size(lam) - size(mu)
    if gap < -r or gap > r or (gap - r) % 2 != 0:
        return 0
    a = (size(mu) + r - size(lam)) // 2
    b = r - a
    count = 0
    for nu in horizontal_strips(mu, a, "down"):
        if size(lam) - size(nu) == b and is_horizontal_strip(lam, nu):
            count += 1
    return count


# -- serialization -------------------------------------------------------------

_PART_RE = re.compile(r"^\[\s*(?:\d+\s*(?:,\s*\d+\s*)*)?\]$")


def format_partition(p: Partition) -> str:
    return "[" + ",".join(str(x) for x in p) + "]"


def parse_partition(text: str) -> Partition:
    text = text.strip()
    if not _PART_RE.match(text):
        raise ValueError(f"cannot parse partition {text!r}")
    inner = text[1:-1].strip()
    if not inner:
        return ()
    return check_partition(int(x) for x in inner.split(","))


def parse_vector(text: str) -> tuple[int, ...]:
    """Like parse_partition but allows arbitrary signed, unordered entries."""
    text = text.strip()
    if not (text.startswith("[") and text.endswith("]")):
        raise ValueError(f"cannot parse integer vector {text!r}")
    inner = text[1:-1].strip()
    if not inner:
        return ()
    return tuple(int(x) for x in inner.split(","))
