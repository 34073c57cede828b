"""Exact scalar arithmetic: sparse univariate (Laurent) polynomials over Q,
rational functions, and theta-polynomials with rational-function coefficients.

Every coefficient in this package is an exact Fraction; there is no floating
point anywhere.  All values are immutable after construction and safe to share.

Canonical text format for polynomials (round-trips through parse_poly):

    "1 - 1*t^1 + 1*t^2"        terms sorted by exponent ascending
    "0"                        the zero polynomial
    "1*T^-2 + 3/2*T^1"         Laurent exponents allowed when flagged
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd as int_gcd
from typing import Iterable

ZERO = Fraction(0)
ONE = Fraction(1)


class Poly:
    """Sparse univariate polynomial: map exponent -> nonzero Fraction.

    ``laurent=True`` permits negative exponents; plain polynomials reject them.
    """

    __slots__ = ("var", "terms", "laurent", "_hash")

    def __init__(self, var: str, terms: dict[int, Fraction] | None = None, laurent: bool = False):
        clean: dict[int, Fraction] = {}
        if terms:
            for e, c in terms.items():
                c = Fraction(c)
                if c == 0:
                    continue
                if e < 0 and not laurent:
                    raise ValueError(f"negative exponent {e} in non-Laurent polynomial")
                clean[int(e)] = c
        object.__setattr__(self, "var", var)
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "laurent", laurent)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def const(var: str, c, laurent: bool = False) -> "Poly":
        return Poly(var, {0: Fraction(c)}, laurent)

    @staticmethod
    def x(var: str, e: int = 1, laurent: bool = False) -> "Poly":
        return Poly(var, {e: ONE}, laurent or e < 0)

    # -- basic queries -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_const(self) -> bool:
        return not self.terms or set(self.terms) == {0}

    def const_value(self) -> Fraction:
        if not self.is_const():
            raise ValueError(f"not a constant: {self}")
        return self.terms.get(0, ZERO)

    def degree(self) -> int:
        """Top exponent; -1 for the zero polynomial (non-Laurent convention)."""
        return max(self.terms) if self.terms else -1

    def low_degree(self) -> int:
        return min(self.terms) if self.terms else 0

    def leading_coeff(self) -> Fraction:
        return self.terms[self.degree()] if self.terms else ZERO

    def coeff(self, e: int) -> Fraction:
        return self.terms.get(e, ZERO)

    # -- ring operations ---------------------------------------------------

    def _check(self, other: "Poly"):
        if self.var != other.var:
            raise ValueError(f"mixed indeterminates {self.var!r} and {other.var!r}")

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, ZERO) + c
        return Poly(self.var, terms, self.laurent or other.laurent)

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __neg__(self) -> "Poly":
        return Poly(self.var, {e: -c for e, c in self.terms.items()}, self.laurent)

    def __mul__(self, other: "Poly") -> "Poly":
        self._check(other)
        terms: dict[int, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                terms[e] = terms.get(e, ZERO) + c1 * c2
        return Poly(self.var, terms, self.laurent or other.laurent)

    def scale(self, c) -> "Poly":
        c = Fraction(c)
        return Poly(self.var, {e: k * c for e, k in self.terms.items()}, self.laurent)

    def shift(self, d: int) -> "Poly":
        """Multiply by var^d (Laurent flag set when exponents go negative)."""
        terms = {e + d: c for e, c in self.terms.items()}
        return Poly(self.var, terms, self.laurent or any(e < 0 for e in terms))

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = Poly.const(self.var, 1, self.laurent)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.var == other.var and self.terms == other.terms

    def __hash__(self):
        h = object.__getattribute__(self, "_hash")
        if h is None:
            h = hash((self.var, frozenset(self.terms.items())))
            object.__setattr__(self, "_hash", h)
        return h

    # -- evaluation & substitution ------------------------------------------

    def evaluate(self, value: Fraction) -> Fraction:
        value = Fraction(value)
        total = ZERO
        for e, c in self.terms.items():
            total += c * value**e
        return total

    def substitute_power(self, k: int, var: str | None = None) -> "Poly":
        """Replace the indeterminate x by x^k (used for q = v**2 lifts)."""
        terms = {e * k: c for e, c in self.terms.items()}
        return Poly(var or self.var, terms, self.laurent or any(e < 0 for e in terms))

    def rename(self, var: str) -> "Poly":
        return Poly(var, dict(self.terms), self.laurent)

    def as_plain(self) -> tuple["Poly", int]:
        """Write self = x^(-s) * p with p a plain polynomial; return (p, s>=0)."""
        if not self.terms:
            return Poly(self.var), 0
        low = min(self.terms)
        s = -low if low < 0 else 0
        return Poly(self.var, {e + s: c for e, c in self.terms.items()}), s

    # -- text ---------------------------------------------------------------

    def text(self) -> str:
        return format_poly(self)

    def __repr__(self):
        return f"Poly({self.text()!r})"


def poly_divmod(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    """Quotient and remainder in Q[x]; inputs must be plain polynomials."""
    a._check(b)
    if a.laurent or b.laurent:
        raise ValueError("divmod is defined for non-Laurent polynomials only")
    if b.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    var = a.var
    rem = dict(a.terms)
    quot: dict[int, Fraction] = {}
    db, lb = b.degree(), b.leading_coeff()
    while rem:
        dr = max(rem)
        if dr < db:
            break
        c = rem[dr] / lb
        quot[dr - db] = c
        for e, k in b.terms.items():
            ee = e + dr - db
            nv = rem.get(ee, ZERO) - c * k
            if nv == 0:
                rem.pop(ee, None)
            else:
                rem[ee] = nv
    return Poly(var, quot), Poly(var, rem)


def poly_exact_div(a: Poly, b: Poly) -> Poly:
    """Exact division; raises if the remainder is nonzero.

    Laurent inputs are handled by clearing powers of the indeterminate first.
    """
    ap, sa = a.as_plain()
    bp, sb = b.as_plain()
    q, r = poly_divmod(ap, bp)
    if not r.is_zero():
        raise ValueError("inexact polynomial division")
    return q.shift(sb - sa)


def _dense_int(p: Poly) -> tuple[list[int], int]:
    """Dense integer coefficient list (low to high) and cleared denominator."""
    if p.is_zero():
        return [], 1
    deg = p.degree()
    den = 1
    for c in p.terms.values():
        den = den * c.denominator // int_gcd(den, c.denominator)
    out = [0] * (deg + 1)
    for e, c in p.terms.items():
        out[e] = int(c * den)
    return out, den


def _int_content(cs: Iterable[int]) -> int:
    g = 0
    for c in cs:
        g = int_gcd(g, abs(c))
        if g == 1:
            return 1
    return g


def _primitive(cs: list[int]) -> list[int]:
    while cs and cs[-1] == 0:
        cs.pop()
    g = _int_content(cs)
    if g > 1:
        cs = [c // g for c in cs]
    return cs


def _pseudo_rem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder of dense integer polys (lists low-to-high)."""
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    while len(a) - 1 >= db and a:
        da, la = len(a) - 1, a[-1]
        a = [c * lb for c in a]
        for i, bc in enumerate(b):
            a[i + da - db] -= la * bc
        while a and a[-1] == 0:
            a.pop()
    return a


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd in Q[x] via a primitive pseudo-remainder sequence."""
    a._check(b)
    ap, _ = a.as_plain()
    bp, _ = b.as_plain()
    u, _ = _dense_int(ap)
    v, _ = _dense_int(bp)
    u, v = _primitive(u), _primitive(v)
    if not u:
        u, v = v, []
    while v:
        r = _primitive(_pseudo_rem(u, v))
        u, v = v, r
    if not u:
        return Poly(a.var)
    lead = Fraction(u[-1])
    return Poly(a.var, {e: Fraction(c) / lead for e, c in enumerate(u) if c})


# -- canonical text --------------------------------------------------------

_TERM_RE = re.compile(r"^(-?\d+(?:/\d+)?)(?:\*([A-Za-z_][A-Za-z_0-9]*)\^(-?\d+))?$")


def format_poly(p: Poly) -> str:
    if p.is_zero():
        return "0"
    parts: list[str] = []
    for e in sorted(p.terms):
        c = p.terms[e]
        body = str(abs(c)) if e == 0 else f"{abs(c)}*{p.var}^{e}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)


def parse_poly(text: str, var: str, laurent: bool = False) -> Poly:
    """Parse the canonical polynomial text format (inverse of format_poly)."""
    text = text.strip()
    if text == "0":
        return Poly(var, {}, laurent)
    norm = text.replace(" - ", " + -").split(" + ")
    terms: dict[int, Fraction] = {}
    for chunk in norm:
        chunk = chunk.strip()
        m = _TERM_RE.match(chunk)
        if not m:
            raise ValueError(f"cannot parse polynomial term {chunk!r} in {text!r}")
        coeff = Fraction(m.group(1))
        if m.group(2) is None:
            e = 0
        else:
            if m.group(2) != var:
                raise ValueError(f"unexpected indeterminate {m.group(2)!r}, wanted {var!r}")
            e = int(m.group(3))
        terms[e] = terms.get(e, ZERO) + coeff
    return Poly(var, terms, laurent or any(e < 0 for e in terms))


class RatFunc:
    """Rational function num/den in one indeterminate.

    Canonical form: gcd(num, den) = 1, den monic and non-Laurent.  Equality of
    canonical forms is structural equality.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: Poly, den: Poly | None = None):
        var = num.var
        if den is not None and den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if den is None or den.is_const():
            # fast path: constant denominator folds into the numerator
            if den is not None:
                num._check(den)
                c = den.const_value()
                if c != 1:
                    num = num.scale(1 / c)
            if num.laurent and num.terms and min(num.terms) < 0:
                s = -min(num.terms)
                np = num.shift(s)
                dp = Poly.x(var, s)
            else:
                np = Poly(var, dict(num.terms)) if num.laurent else num
                dp = Poly.const(var, 1)
            object.__setattr__(self, "num", np)
            object.__setattr__(self, "den", dp)
            object.__setattr__(self, "_hash", None)
            return
        num._check(den)
        np, sn = num.as_plain()
        dp, sd = den.as_plain()
        # x^(-sn) np / x^(-sd) dp: move leftover power into whichever side keeps both plain
        shift = sd - sn
        if shift >= 0:
            np = np.shift(shift)
        else:
            dp = dp.shift(-shift)
        if np.is_zero():
            dp = Poly.const(var, 1)
        else:
            # strip common powers of x cheaply before the gcd
            k = min(np.low_degree(), dp.low_degree())
            if k > 0:
                np, dp = np.shift(-k), dp.shift(-k)
            if not dp.is_const():
                g = poly_gcd(np, dp)
                if g.degree() > 0:
                    np = poly_exact_div(np, g)
                    dp = poly_exact_div(dp, g)
            lc = dp.leading_coeff()
            if lc != 1:
                dp = dp.scale(1 / lc)
                np = np.scale(1 / lc)
        object.__setattr__(self, "num", np)
        object.__setattr__(self, "den", dp)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("RatFunc is immutable")

    @property
    def var(self) -> str:
        return self.num.var

    @staticmethod
    def const(var: str, c) -> "RatFunc":
        return RatFunc(Poly.const(var, c))

    @staticmethod
    def of(p: Poly) -> "RatFunc":
        return RatFunc(p)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.num.is_const() and self.num.const_value() == 1 and self.den.is_const()

    def is_polynomial(self) -> bool:
        return self.den.is_const()

    def to_poly(self, laurent: bool = False) -> Poly:
        """Return the numerator when the denominator is 1 or a pure power of x."""
        if self.den.is_const():
            p = self.num
            return Poly(p.var, dict(p.terms), laurent) if laurent else p
        if laurent and len(self.den.terms) == 1:
            (e,) = self.den.terms
            return self.num.shift(-e)
        raise ValueError(f"not a polynomial: {self}")

    def __add__(self, other: "RatFunc") -> "RatFunc":
        if self.den.is_const() and other.den.is_const():
            return RatFunc(self.num + other.num)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    def __sub__(self, other: "RatFunc") -> "RatFunc":
        if self.den.is_const() and other.den.is_const():
            return RatFunc(self.num - other.num)
        return RatFunc(self.num * other.den - other.num * self.den, self.den * other.den)

    def __neg__(self) -> "RatFunc":
        return RatFunc(-self.num, self.den)

    def __mul__(self, other: "RatFunc") -> "RatFunc":
        if self.den.is_const() and other.den.is_const():
            return RatFunc(self.num * other.num)
        return RatFunc(self.num * other.num, self.den * other.den)

    def __truediv__(self, other: "RatFunc") -> "RatFunc":
        if other.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def inverse(self) -> "RatFunc":
        return RatFunc.const(self.var, 1) / self

    def scale(self, c) -> "RatFunc":
        return RatFunc(self.num.scale(c), self.den)

    def __pow__(self, n: int) -> "RatFunc":
        if n < 0:
            return self.inverse() ** (-n)
        out = RatFunc.const(self.var, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, RatFunc) and self.num == other.num and self.den == other.den

    def __hash__(self):
        h = object.__getattribute__(self, "_hash")
        if h is None:
            h = hash((self.num, self.den))
            object.__setattr__(self, "_hash", h)
        return h

    def evaluate(self, value: Fraction) -> Fraction:
        d = self.den.evaluate(value)
        if d == 0:
            raise ZeroDivisionError(f"pole of {self} at {value}")
        return self.num.evaluate(value) / d

    def substitute(self, value: "RatFunc") -> "RatFunc":
        """Compose: replace the indeterminate by another rational function."""
        var = value.var
        out_n = RatFunc.const(var, 0)
        for e, c in self.num.terms.items():
            out_n = out_n + (value**e).scale(c)
        out_d = RatFunc.const(var, 0)
        for e, c in self.den.terms.items():
            out_d = out_d + (value**e).scale(c)
        if out_d.is_zero():
            raise ZeroDivisionError("pole hit by substitution")
        return out_n / out_d

    def substitute_power(self, k: int, var: str | None = None) -> "RatFunc":
        return RatFunc(self.num.substitute_power(k, var), self.den.substitute_power(k, var))

    def rename(self, var: str) -> "RatFunc":
        return RatFunc(self.num.rename(var), self.den.rename(var))

    def text(self) -> str:
        if self.den.is_const():
            return format_poly(self.num)
        return f"({format_poly(self.num)})/({format_poly(self.den)})"

    def __repr__(self):
        return f"RatFunc({self.text()!r})"


_RF_RE = re.compile(r"^\((?P<n>[^()]*)\)/\((?P<d>[^()]*)\)$")


def parse_ratfunc(text: str, var: str) -> RatFunc:
    text = text.strip()
    m = _RF_RE.match(text)
    if m:
        return RatFunc(parse_poly(m.group("n"), var, laurent=True), parse_poly(m.group("d"), var))
    return RatFunc(parse_poly(text, var, laurent=True))


THETA = "theta"


class Coeff:
    """Element of Q(t)[theta]: a polynomial in theta with RatFunc-in-t coefficients."""

    __slots__ = ("terms", "var", "_hash")

    def __init__(self, terms: dict[int, RatFunc] | None = None, var: str = "t"):
        clean: dict[int, RatFunc] = {}
        if terms:
            for a, rf in terms.items():
                if a < 0:
                    raise ValueError("theta exponents must be non-negative")
                if not rf.is_zero():
                    if rf.var != var:
                        raise ValueError(f"coefficient in {rf.var!r}, expected {var!r}")
                    clean[int(a)] = rf
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "var", var)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Coeff is immutable")

    @staticmethod
    def const(c, var: str = "t") -> "Coeff":
        return Coeff({0: RatFunc.const(var, c)}, var)

    @staticmethod
    def of(rf: RatFunc, theta_exp: int = 0) -> "Coeff":
        return Coeff({theta_exp: rf}, rf.var)

    @staticmethod
    def t_poly(p: Poly, theta_exp: int = 0) -> "Coeff":
        return Coeff({theta_exp: RatFunc(p)}, p.var)

    def is_zero(self) -> bool:
        return not self.terms

    def theta_degree(self) -> int:
        return max(self.terms) if self.terms else -1

    def theta_coefficient(self, a: int) -> RatFunc:
        return self.terms.get(a, RatFunc.const(self.var, 0))

    def __add__(self, other: "Coeff") -> "Coeff":
        terms = dict(self.terms)
        for a, rf in other.terms.items():
            cur = terms.get(a)
            terms[a] = rf if cur is None else cur + rf
        return Coeff(terms, self.var)

    def __sub__(self, other: "Coeff") -> "Coeff":
        return self + (-other)

    def __neg__(self) -> "Coeff":
        return Coeff({a: -rf for a, rf in self.terms.items()}, self.var)

    def __mul__(self, other: "Coeff") -> "Coeff":
        terms: dict[int, RatFunc] = {}
        for a1, r1 in self.terms.items():
            for a2, r2 in other.terms.items():
                a = a1 + a2
                p = r1 * r2
                cur = terms.get(a)
                terms[a] = p if cur is None else cur + p
        return Coeff(terms, self.var)

    def scale_rf(self, rf: RatFunc) -> "Coeff":
        return Coeff({a: r * rf for a, r in self.terms.items()}, self.var)

    def scale_term(self, rf: RatFunc, theta_exp: int) -> "Coeff":
        """Multiply by the single theta-monomial rf * theta^theta_exp."""
        return Coeff({a + theta_exp: r * rf for a, r in self.terms.items()}, self.var)

    def __eq__(self, other) -> bool:
        return isinstance(other, Coeff) and self.var == other.var and self.terms == other.terms

    def __hash__(self):
        h = object.__getattribute__(self, "_hash")
        if h is None:
            h = hash((self.var, frozenset(self.terms.items())))
            object.__setattr__(self, "_hash", h)
        return h

    def substitute(self, t_value: RatFunc | None = None, theta_value: "Coeff | None" = None) -> "Coeff":
        """Ring homomorphism sending t and/or theta to the given values.

        ``t_value`` is a RatFunc (in any variable); ``theta_value`` a Coeff over
        the target variable.  A vanishing denominator raises ZeroDivisionError.
        """
        var = t_value.var if t_value is not None else self.var
        out = Coeff({}, var)
        for a, rf in self.terms.items():
            base = rf.substitute(t_value) if t_value is not None else rf
            term = Coeff.of(base)
            if theta_value is not None:
                th = Coeff.const(1, var)
                for _ in range(a):
                    th = th * theta_value
                term = term * th
            else:
                term = Coeff({k + a: v for k, v in term.terms.items()}, var)
            out = out + term
        return out

    def text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for a in sorted(self.terms):
            rf = self.terms[a]
            body = f"({rf.text()})"
            parts.append(body if a == 0 else f"{body}*{THETA}^{a}")
        return " + ".join(parts)

    def __repr__(self):
        return f"Coeff({self.text()!r})"


def parse_coeff(text: str, var: str = "t") -> Coeff:
    """Parse the canonical Coeff text (inverse of Coeff.text)."""
    text = text.strip()
    if text == "0":
        return Coeff({}, var)
    terms: dict[int, RatFunc] = {}
    for chunk in text.split(" + "):
        chunk = chunk.strip()
        m = re.match(rf"^\((?P<body>.*)\)(?:\*{THETA}\^(?P<a>\d+))?$", chunk)
        if not m:
            raise ValueError(f"cannot parse coefficient chunk {chunk!r}")
        a = int(m.group("a") or 0)
        rf = parse_ratfunc(m.group("body"), var)
        cur = terms.get(a)
        terms[a] = rf if cur is None else cur + rf
    return Coeff(terms, var)
