"""The ring Lambda_{t,theta} in its monomial basis v_mu, evaluation of the
raising/lowering-operator Giambelli polynomials V_alpha and Vi_alpha, the
recursion that peels off the last index, and change of basis into {Vi_lambda}.

Representation: a VExpr maps partition tuples mu (the monomial v_mu) to Coeff
values in Q(t)[theta].  v_0 = 1 and v_a = 0 for a < 0, so monomial keys list
only positive parts.
"""

from __future__ import annotations

import json
from fractions import Fraction
from functools import lru_cache

from .exactalg import Coeff, Poly, RatFunc, parse_coeff
from .partitions import Partition, dominates, from_vector, size

IntVector = tuple[int, ...]

_T = "t"


def _one() -> Coeff:
    return Coeff.const(1, _T)


class VExpr:
    """Finite linear combination of monomials v_mu with Coeff coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[Partition, Coeff] | None = None):
        clean = {}
        if terms:
            for mu, c in terms.items():
                if not c.is_zero():
                    clean[tuple(mu)] = c
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("VExpr is immutable")

    @staticmethod
    def zero() -> "VExpr":
        return VExpr({})

    @staticmethod
    def unit() -> "VExpr":
        return VExpr({(): _one()})

    @staticmethod
    def monomial(mu: Partition, coeff: Coeff | None = None) -> "VExpr":
        return VExpr({tuple(mu): coeff if coeff is not None else _one()})

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "VExpr") -> "VExpr":
        terms = dict(self.terms)
        for mu, c in other.terms.items():
            cur = terms.get(mu)
            terms[mu] = c if cur is None else cur + c
        return VExpr(terms)

    def __sub__(self, other: "VExpr") -> "VExpr":
        return self + other.scale(Coeff.const(-1, _T))

    def scale(self, c: Coeff) -> "VExpr":
        return VExpr({mu: k * c for mu, k in self.terms.items()})

    def __mul__(self, other: "VExpr") -> "VExpr":
        terms: dict[Partition, Coeff] = {}
        for mu, c in self.terms.items():
            for nu, d in other.terms.items():
                key = tuple(sorted(mu + nu, reverse=True))
                p = c * d
                cur = terms.get(key)
                terms[key] = p if cur is None else cur + p
        return VExpr(terms)

    def mul_row(self, r: int) -> "VExpr":
        """Multiply by the single monomial v_r (r >= 0; v_0 is the unit)."""
        if r < 0:
            return VExpr.zero()
        if r == 0:
            return self
        return VExpr({tuple(sorted(mu + (r,), reverse=True)): c for mu, c in self.terms.items()})

    def coefficient(self, mu: Partition) -> Coeff:
        return self.terms.get(tuple(mu), Coeff({}, _T))

    def substitute(self, t_value: RatFunc | None = None, theta_value: Coeff | None = None) -> "VExpr":
        return VExpr({mu: c.substitute(t_value, theta_value) for mu, c in self.terms.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, VExpr) and self.terms == other.terms

    def max_weight(self) -> int:
        """Largest |mu| + 2*(theta degree) over stored terms."""
        best = 0
        for mu, c in self.terms.items():
            best = max(best, size(mu) + 2 * max(c.theta_degree(), 0))
        return best

    def to_json(self) -> dict:
        items = sorted(self.terms.items(), key=lambda kv: (-size(kv[0]), kv[0]))
        return {"terms": [{"mu": list(mu), "coeff": c.text()} for mu, c in items]}

    @staticmethod
    def from_json(obj: dict) -> "VExpr":
        terms = {}
        for item in obj["terms"]:
            mu = tuple(int(x) for x in item["mu"])
            terms[mu] = parse_coeff(item["coeff"], _T)
        return VExpr(terms)

    def text(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    def __repr__(self):
        if not self.terms:
            return "VExpr(0)"
        bits = [f"v{list(mu)}: {c.text()}" for mu, c in sorted(self.terms.items(), key=lambda kv: (-size(kv[0]), kv[0]))]
        return "VExpr{" + "; ".join(bits) + "}"


@lru_cache(maxsize=None)
def _tpow_factor(p: int) -> RatFunc:
    """(1 - t^-1) t^p = t^p - t^(p-1), the p-th geometric factor of eq F."""
    return RatFunc(Poly(_T, {p: Fraction(1), p - 1: Fraction(-1)}, laurent=(p - 1 < 0)))


def _apply_factor(state: dict[IntVector, Coeff], i: int, j: int, lowering: bool) -> dict[IntVector, Coeff]:
    """Apply one series factor (1-u)/(1-tu) with u = theta L_ij or R_ij.

    Position j only ever decreases from the moment its factor group starts, so
    the geometric series for a given vector truncates at the current j-entry
    and vectors that drive it negative are dropped.
    """
    out: dict[IntVector, Coeff] = {}

    def add(vec: IntVector, c: Coeff):
        cur = out.get(vec)
        out[vec] = c if cur is None else cur + c

    for vec, c in state.items():
        limit = vec[j]
        if limit < 0:
            continue
        add(vec, c)
        for p in range(1, limit + 1):
            lst = list(vec)
            lst[j] = vec[j] - p
            lst[i] = vec[i] - p if lowering else vec[i] + p
            add(tuple(lst), c.scale_term(_tpow_factor(p), p if lowering else 0))
    return out


@lru_cache(maxsize=None)
def giambelli_v(alpha: IntVector, mode: str = "iota") -> VExpr:
    """Evaluate V_alpha (classical) or Vi_alpha (iota) in the monomial basis.

    Pairs are processed grouped by their second index j from last to first;
    within a group all lowering factors come before all raising factors.  All
    factors commute, and once group j finishes nothing can raise position j
    again, which justifies the per-factor truncation in _apply_factor.
    """
    if mode not in ("classical", "iota"):
        raise ValueError(f"mode must be 'classical' or 'iota', got {mode!r}")
    alpha = tuple(int(x) for x in alpha)
    ell = len(alpha)
    state: dict[IntVector, Coeff] = {alpha: _one()}
    for j in range(ell - 1, 0, -1):
        if mode == "iota":
            for i in range(j):
                state = _apply_factor(state, i, j, lowering=True)
        for i in range(j):
            state = _apply_factor(state, i, j, lowering=False)
        state = {vec: c for vec, c in state.items() if vec[j] >= 0}
    terms: dict[Partition, Coeff] = {}
    for vec, c in state.items():
        mu = from_vector(vec)
        if mu is None:
            continue
        cur = terms.get(mu)
        terms[mu] = c if cur is None else cur + c
    return VExpr(terms)


def _compositions(total: int, parts: int):
    """All tuples in N^parts with given sum."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _recur_full(delta: IntVector) -> VExpr:
    if len(delta) == 0:
        return VExpr.unit()
    if len(delta) == 1:
        r = delta[0]
        if r < 0:
            return VExpr.zero()
        return VExpr.unit().mul_row(r)
    alpha, r = delta[:-1], delta[-1]
    ell1 = len(alpha)
    out = VExpr.zero()
    one = Poly.const(_T, 1)
    for total_b in range(max(r, 0) + 1):
        for beta in _compositions(total_b, ell1):
            for total_g in range(max(r, 0) - total_b + 1):
                for gamma in _compositions(total_g, ell1):
                    row = r - total_b - total_g
                    if row < 0:
                        continue
                    shifted = tuple(a - b + g for a, b, g in zip(alpha, beta, gamma))
                    inner = _recur_full(shifted)
                    if inner.is_zero():
                        continue
                    nz = sum(1 for x in beta if x) + sum(1 for x in gamma if x)
                    # theta^{|beta|} t^{|beta|+|gamma|} (1 - t^-1)^{(num nonzero)}
                    rf = RatFunc((one - Poly.x(_T, -1, laurent=True)) ** nz * Poly.x(_T, total_b + total_g))
                    coeff = Coeff.of(rf, theta_exp=total_b)
                    out = out + inner.mul_row(row).scale(coeff)
    return out


def giambelli_recur(alpha: IntVector, r: int) -> VExpr:
    """Vi_{(alpha, r)} by the last-index recursion; agrees with giambelli_v."""
    return _recur_full(tuple(int(x) for x in alpha) + (int(r),))


def expand_in_iota_basis(e: VExpr, degree_bound: int | None = None) -> dict[Partition, Coeff]:
    """Coefficients c_lambda with e = sum c_lambda Vi_lambda.

    Triangular elimination: among remaining monomials of maximal size pick a
    dominance-minimal one; its coefficient is final because Vi_mu = v_mu plus
    dominance-greater terms of the same size plus lower-size terms.
    """
    if degree_bound is not None and e.max_weight() > degree_bound:
        raise ValueError("expression exceeds the stated degree bound")
    remaining = dict(e.terms)
    out: dict[Partition, Coeff] = {}
    while remaining:
        top = max(size(mu) for mu in remaining)
        candidates = sorted(mu for mu in remaining if size(mu) == top)
        # a dominance-minimal candidate (one always exists in a finite poset)
        mu = next(c for c in candidates if all(d == c or not dominates(c, d) for d in candidates))
        c = remaining.pop(mu)
        cur = out.get(mu)
        out[mu] = c if cur is None else cur + c
        basis = giambelli_v(mu, "iota")
        for nu, k in basis.terms.items():
            if nu == mu:
                continue
            delta = k * c
            curr = remaining.get(nu)
            newv = (-delta) if curr is None else curr - delta
            if newv.is_zero():
                remaining.pop(nu, None)
            else:
                remaining[nu] = newv
    return {mu: c for mu, c in out.items() if not c.is_zero()}


def vexpr_from_iota(coeffs: dict[Partition, Coeff]) -> VExpr:
    """Inverse of expand_in_iota_basis: assemble sum c_lambda Vi_lambda."""
    out = VExpr.zero()
    for lam, c in coeffs.items():
        out = out + giambelli_v(tuple(lam), "iota").scale(c)
    return out


def jacobi_trudi(lam: Partition) -> VExpr:
    """Schur function as the h-determinant det(h_{lam_i - i + j}), in v-monomials."""
    from itertools import permutations

    n = len(lam)
    if n == 0:
        return VExpr.unit()
    out = VExpr.zero()
    for perm in permutations(range(n)):
        sign = 1
        seen = list(perm)
        for i in range(n):
            for j in range(i + 1, n):
                if seen[i] > seen[j]:
                    sign = -sign
        rows = [lam[i] - i + perm[i] for i in range(n)]
        if any(r < 0 for r in rows):
            continue
        term = VExpr.unit()
        for r in rows:
            term = term.mul_row(r)
        out = out + term.scale(Coeff.const(sign, _T))
    return out
