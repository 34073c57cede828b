"""The four iPieri rules as direct coefficient formulas, the two mirror
identities, and the t=0 Schur-type rule.

Each rule is implemented from its own closed formula so that cross-rule
agreement genuinely tests the underlying theorems; none of them calls the
Giambelli expansion (that expansion is the independent oracle in the tests).
"""

from __future__ import annotations

from .exactalg import Coeff, Poly, RatFunc
from .giambelli import VExpr, giambelli_v
from .partitions import (
    Partition,
    b_lambda,
    f_vertical,
    horizontal_strips,
    n_count,
    pad,
    phi_r,
    phi_skew,
    psi_skew,
    size,
    vertical_strips,
)

_T = "t"

PieriExpansion = dict[Partition, Coeff]


def _add(out: PieriExpansion, lam: Partition, c: Coeff):
    cur = out.get(lam)
    total = c if cur is None else cur + c
    if total.is_zero():
        out.pop(lam, None)
    else:
        out[lam] = total


def pieri_horizontal_down_up(mu: Partition, r: int) -> PieriExpansion:
    """Vi_mu * v_r = sum_{a+b=r} sum_{nu->mu (a)} sum_{nu->lam (b)}
    theta^a phi_{mu/nu} psi_{lam/nu} Vi_lam."""
    if r < 1:
        raise ValueError("r must be >= 1")
    out: PieriExpansion = {}
    for a in range(r + 1):
        b = r - a
        for nu in horizontal_strips(mu, a, "down"):
            phi = phi_skew(mu, nu)
            for lam in horizontal_strips(nu, b, "up"):
                c = Coeff.t_poly(phi * psi_skew(lam, nu), theta_exp=a)
                _add(out, lam, c)
    return out


def pieri_horizontal_up_down(mu: Partition, r: int) -> PieriExpansion:
    """Up-down horizontal rule: strips pass through a common xi above mu and
    lam, with the (t^i - t^{i-1}) correction layer for i >= 1."""
    if r < 1:
        raise ValueError("r must be >= 1")
    out: PieriExpansion = {}
    one = Poly.const(_T, 1)
    for a in range(r + 1):
        b = r - a
        for i in range(min(a, b) + 1):
            weight = one if i == 0 else Poly.x(_T, i) - Poly.x(_T, i - 1)
            for xi in horizontal_strips(mu, b - i, "up"):
                psi = psi_skew(xi, mu)
                for lam in horizontal_strips(xi, a - i, "down"):
                    c = Coeff.t_poly(weight * phi_skew(xi, lam) * psi, theta_exp=a)
                    _add(out, lam, c)
    return out


def _ratio_to_coeff(rf: RatFunc, theta_exp: int) -> Coeff:
    """Assert a Q(t) intermediate collapses to a polynomial and wrap it."""
    if not rf.is_polynomial():
        raise ArithmeticError(f"Pieri coefficient failed to normalize to a polynomial: {rf}")
    return Coeff.t_poly(rf.to_poly(), theta_exp)


def pieri_vertical_down_up(mu: Partition, r: int) -> PieriExpansion:
    """Vi_mu * Vi_(1^r): down to nu by a vertical a-strip, up to lam by a
    vertical b-strip, weighted by (b_nu/b_lam) phi_r f f."""
    if r < 1:
        raise ValueError("r must be >= 1")
    out: PieriExpansion = {}
    phir = RatFunc(phi_r(r))
    for a in range(r + 1):
        b = r - a
        for nu in vertical_strips(mu, a, "down"):
            fmu = f_vertical(nu, a, mu)
            if fmu.is_zero():
                continue
            bnu = RatFunc(b_lambda(nu))
            for lam in vertical_strips(nu, b, "up"):
                flam = f_vertical(nu, b, lam)
                if flam.is_zero():
                    continue
                rf = bnu * phir * RatFunc(flam * fmu) / RatFunc(b_lambda(lam))
                _add(out, lam, _ratio_to_coeff(rf, a))
    return out


def pieri_vertical_up_down(mu: Partition, r: int) -> PieriExpansion:
    """Vi_mu * Vi_(1^r): up through xi, with the alternating phi_r/phi_i layer."""
    if r < 1:
        raise ValueError("r must be >= 1")
    out: PieriExpansion = {}
    bmu = RatFunc(b_lambda(mu))
    for a in range(r + 1):
        b = r - a
        for i in range(min(a, b) + 1):
            sign = -1 if i % 2 else 1
            scale = RatFunc(phi_r(r).scale(sign) * Poly.x(_T, i * (i - 1) // 2)) / RatFunc(phi_r(i))
            for xi in vertical_strips(mu, b - i, "up"):
                fxi_mu = f_vertical(mu, b - i, xi)
                if fxi_mu.is_zero():
                    continue
                base = scale * bmu / RatFunc(b_lambda(xi)) * RatFunc(fxi_mu)
                for lam in vertical_strips(xi, a - i, "down"):
                    flam = f_vertical(lam, a - i, xi)
                    if flam.is_zero():
                        continue
                    _add(out, lam, _ratio_to_coeff(base * RatFunc(flam), a))
    return out


PIERI_RULES = {
    "hdu": pieri_horizontal_down_up,
    "hud": pieri_horizontal_up_down,
    "vdu": pieri_vertical_down_up,
    "vud": pieri_vertical_up_down,
}


def pieri(rule: str, mu: Partition, r: int) -> PieriExpansion:
    try:
        fn = PIERI_RULES[rule]
    except KeyError:
        raise ValueError(f"unknown Pieri rule {rule!r}; expected one of {sorted(PIERI_RULES)}") from None
    return fn(tuple(mu), r)


def expansion_to_vexpr(exp: PieriExpansion) -> VExpr:
    out = VExpr.zero()
    for lam, c in exp.items():
        out = out + giambelli_v(tuple(lam), "iota").scale(c)
    return out


def _compositions(total: int, parts: int):
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def mirror_identity_check(kind: str, base: Partition, a: int, b: int) -> bool:
    """Verify mirror identity I (raising side) or II (lowering side) for the
    given partition by expanding both sides in the v-monomial basis."""
    one_minus_t = Poly.const(_T, 1) - Poly.x(_T, 1)
    if kind == "I":
        rho = tuple(base)
        ell = len(rho)
        lhs = VExpr.zero()
        for gamma in _compositions(b, ell + 1):
            nz = sum(1 for x in gamma[:-1] if x)
            vec = tuple(x + g for x, g in zip(pad(rho, ell + 1), gamma))
            lhs = lhs + giambelli_v(vec, "iota").scale(Coeff.t_poly(one_minus_t**nz))
        rhs = VExpr.zero()
        for lam in horizontal_strips(rho, b, "up"):
            rhs = rhs + giambelli_v(tuple(lam), "iota").scale(Coeff.t_poly(psi_skew(lam, rho)))
        return lhs == rhs
    if kind == "II":
        mu = tuple(base)
        ell = len(mu)
        lhs = VExpr.zero()
        for beta in _compositions(a, ell):
            # beta <= mu componentwise: the operator derivation produces the
            # monomial v_{mu-beta,b}, which vanishes on any negative entry
            if any(y > x for x, y in zip(mu, beta)):
                continue
            nz = sum(1 for x in beta if x)
            vec = tuple(x - y for x, y in zip(mu, beta)) + (b,)
            lhs = lhs + giambelli_v(vec, "iota").scale(Coeff.t_poly(one_minus_t**nz))
        rhs = VExpr.zero()
        for nu in horizontal_strips(mu, a, "down"):
            vec = pad(nu, ell) + (b,)
            rhs = rhs + giambelli_v(vec, "iota").scale(Coeff.t_poly(phi_skew(mu, nu)))
        return lhs == rhs
    raise ValueError(f"kind must be 'I' or 'II', got {kind!r}")


def ischur_pieri(mu: Partition, r: int) -> PieriExpansion:
    """t=0 rule: si_mu * h_r = sum_a sum_{lam} theta^a N^lam_{mu,r} si_lam."""
    if r < 1:
        raise ValueError("r must be >= 1")
    out: PieriExpansion = {}
    from .partitions import partitions_of

    for a in range(r + 1):
        n = size(mu) + r - 2 * a
        if n < 0:
            continue
        for lam in partitions_of(n):
            count = n_count(mu, r, lam)
            if count:
                _add(out, lam, Coeff.of(RatFunc.const(_T, count), theta_exp=a))
    return out
