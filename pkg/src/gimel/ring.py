"""Exact arithmetic in the graded ring underlying equivariant sl_n data.

Two kinds of ring context are supported:

* ``equivariant``: the polynomial ring Q[x, a1, ..., a_{n-1}], graded by
  deg x = 2, deg a_i = 2(n - i).  The extra generator ``a0`` that appears
  in input data is eliminated through the defining relation
  a0 = -(x^n + a_{n-1} x^{n-1} + ... + a1 x), which gives every element a
  canonical normal form.
* ``specialized``: the quotient Q[x]/(dw) for a monic degree-n potential
  dw, with representatives of degree < n.

All coefficients are ``fractions.Fraction``; no floating point anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Tuple, Union

from .errors import (
    ContextMismatchError,
    DegreeMismatchError,
    MalformedInputError,
    UndefinedDegreeError,
)

Rational = Union[int, Fraction]

EQUIVARIANT = "equivariant"
SPECIALIZED = "specialized"

# Raw polynomials (parser output, fixture entries before normalization) are
# dicts mapping a sorted tuple of (variable name, exponent) pairs to nonzero
# Fraction coefficients.  Variables are "x" and "a0" ... "a{n-1}".
RawTerm = Tuple[Tuple[str, int], ...]
RawPoly = dict  # dict[RawTerm, Fraction]


@dataclass(frozen=True)
class RingCtx:
    """Ring context: n plus either the formal (equivariant) or the
    specialized ring with its monic potential.

    ``potential`` lists the n lower coefficients (c0, ..., c_{n-1}) of
    dw = x^n + c_{n-1} x^{n-1} + ... + c0; the leading 1 is implicit.
    """

    n: int
    kind: str
    potential: Optional[Tuple[Fraction, ...]] = None

    def __post_init__(self):
        if self.n < 2:
            raise MalformedInputError(f"n must be >= 2, got {self.n}")
        if self.kind not in (EQUIVARIANT, SPECIALIZED):
            raise MalformedInputError(f"unknown ring kind {self.kind!r}")
        if self.kind == SPECIALIZED:
            if self.potential is None:
                raise MalformedInputError("specialized context needs a potential")
            pot = tuple(Fraction(c) for c in self.potential)
            if len(pot) != self.n:
                raise DegreeMismatchError(
                    f"potential has {len(pot)} coefficients, expected {self.n}"
                )
            object.__setattr__(self, "potential", pot)
        elif self.potential is not None:
            raise MalformedInputError("equivariant context must not carry a potential")

    @property
    def nvars(self) -> int:
        # exponent-vector length: (x,) specialized, (x, a1..a_{n-1}) equivariant
        return 1 if self.kind == SPECIALIZED else self.n

    def var_names(self) -> Tuple[str, ...]:
        if self.kind == SPECIALIZED:
            return ("x",)
        return ("x",) + tuple(f"a{i}" for i in range(1, self.n))


def equivariant_ctx(n: int) -> RingCtx:
    return RingCtx(n, EQUIVARIANT)


def specialized_ctx(n: int, potential: Iterable[Rational]) -> RingCtx:
    return RingCtx(n, SPECIALIZED, tuple(Fraction(c) for c in potential))


def standard_potential(n: int) -> Tuple[Fraction, ...]:
    """Coefficients of x^n - x^{n-1}, the potential used by the gimel engine."""
    coeffs = [Fraction(0)] * n
    coeffs[n - 1] = Fraction(-1)
    return tuple(coeffs)


@dataclass(frozen=True)
class Poly:
    """Polynomial in normal form for its context.

    ``terms`` maps exponent vectors (tuples over the context's variables)
    to nonzero rational coefficients.  The zero polynomial has no terms.
    Instances are immutable and hashable.
    """

    ctx: RingCtx
    terms: Tuple[Tuple[Tuple[int, ...], Fraction], ...]

    @staticmethod
    def from_dict(ctx: RingCtx, d: Mapping[Tuple[int, ...], Fraction]) -> "Poly":
        items = tuple(sorted((e, c) for e, c in d.items() if c != 0))
        return Poly(ctx, items)

    def as_dict(self) -> dict:
        return dict(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "Poly") -> "Poly":
        return ring_op("add", self, other, self.ctx)

    def __sub__(self, other: "Poly") -> "Poly":
        return self + ring_op("scalar-mul", other, Fraction(-1), other.ctx)

    def __mul__(self, other) -> "Poly":
        if isinstance(other, Poly):
            return ring_op("mul", self, other, self.ctx)
        return ring_op("scalar-mul", self, Fraction(other), self.ctx)

    __rmul__ = __mul__

    def __neg__(self) -> "Poly":
        return ring_op("scalar-mul", self, Fraction(-1), self.ctx)

    def __str__(self) -> str:
        return format_poly(self)


def zero(ctx: RingCtx) -> Poly:
    return Poly(ctx, ())


def constant(ctx: RingCtx, c: Rational) -> Poly:
    c = Fraction(c)
    if c == 0:
        return zero(ctx)
    return Poly.from_dict(ctx, {(0,) * ctx.nvars: c})


def monomial(ctx: RingCtx, exps: Tuple[int, ...], c: Rational = 1) -> Poly:
    """Build a monomial from an exponent vector, reducing to normal form."""
    raw = {tuple(sorted(zip(ctx.var_names(), exps))): Fraction(c)}
    return normalize(raw, ctx)


def x_power(ctx: RingCtx, a: int, c: Rational = 1) -> Poly:
    exps = [0] * ctx.nvars
    exps[0] = a
    return monomial(ctx, tuple(exps), c)


# ---------------------------------------------------------------------------
# raw-polynomial helpers (shared by parser and normalize)


def _raw_add(p: RawPoly, q: RawPoly) -> RawPoly:
    out = dict(p)
    for k, c in q.items():
        nc = out.get(k, Fraction(0)) + c
        if nc == 0:
            out.pop(k, None)
        else:
            out[k] = nc
    return out


def _raw_mul(p: RawPoly, q: RawPoly) -> RawPoly:
    out: RawPoly = {}
    for k1, c1 in p.items():
        e1 = dict(k1)
        for k2, c2 in q.items():
            e = dict(e1)
            for v, n in k2:
                e[v] = e.get(v, 0) + n
            key = tuple(sorted((v, n) for v, n in e.items() if n != 0))
            nc = out.get(key, Fraction(0)) + c1 * c2
            if nc == 0:
                out.pop(key, None)
            else:
                out[key] = nc
    return out


def _raw_scale(p: RawPoly, c: Fraction) -> RawPoly:
    if c == 0:
        return {}
    return {k: v * c for k, v in p.items()}


def raw_const(c: Rational) -> RawPoly:
    c = Fraction(c)
    return {(): c} if c != 0 else {}


def raw_var(name: str) -> RawPoly:
    return {((name, 1),): Fraction(1)}


# ---------------------------------------------------------------------------
# normalization


def normalize(raw: RawPoly, ctx: RingCtx) -> Poly:
    """Bring a raw polynomial (possibly containing a0) into normal form.

    Equivariant contexts eliminate a0 via the defining relation; specialized
    contexts substitute every a_i by the potential coefficient c_i and reduce
    mod dw to degree < n.  Raises MalformedInputError on a variable index
    >= n or an unknown variable.
    """
    n = ctx.n
    for key in raw:
        for v, _ in key:
            if v == "x":
                continue
            if not (v.startswith("a") and v[1:].isdigit()):
                raise MalformedInputError(f"unknown variable {v!r}")
            if int(v[1:]) >= n:
                raise MalformedInputError(f"variable {v!r} out of range for n={n}")

    if ctx.kind == EQUIVARIANT:
        # a0 = -(x^n + a_{n-1} x^{n-1} + ... + a1 x)
        a0_sub: RawPoly = {(("x", n),): Fraction(-1)}
        for i in range(1, n):
            a0_sub[tuple(sorted(((f"a{i}", 1), ("x", i))))] = Fraction(-1)
        out: RawPoly = {}
        for key, coeff in raw.items():
            e = dict(key)
            a0_exp = e.pop("a0", 0)
            base = {tuple(sorted(e.items())): coeff}
            for _ in range(a0_exp):
                base = _raw_mul(base, a0_sub)
            out = _raw_add(out, base)
        d: dict = {}
        for key, coeff in out.items():
            e = dict(key)
            vec = tuple(e.get(v, 0) for v in ctx.var_names())
            d[vec] = d.get(vec, Fraction(0)) + coeff
        return Poly.from_dict(ctx, d)

    # specialized: a_i -> c_i, then reduce mod dw
    coeffs: dict = {}
    for key, coeff in raw.items():
        e = dict(key)
        c = coeff
        for v, exp in e.items():
            if v != "x":
                c *= ctx.potential[int(v[1:])] ** exp
        xe = e.get("x", 0)
        coeffs[xe] = coeffs.get(xe, Fraction(0)) + c
    return _reduce_mod_potential(coeffs, ctx)


def _reduce_mod_potential(coeffs: dict, ctx: RingCtx) -> Poly:
    """Reduce {x-exponent: coeff} mod the monic potential, in place."""
    n = ctx.n
    pot = ctx.potential
    while coeffs:
        m = max(coeffs)
        if m < n:
            break
        c = coeffs.pop(m)
        if c == 0:
            continue
        # x^m = x^{m-n} * (-(c0 + c1 x + ... + c_{n-1} x^{n-1}))
        for i in range(n):
            if pot[i] != 0:
                e = m - n + i
                coeffs[e] = coeffs.get(e, Fraction(0)) - c * pot[i]
    return Poly.from_dict(ctx, {(e,): c for e, c in coeffs.items() if c != 0})


# ---------------------------------------------------------------------------
# ring operations


def ring_op(kind: str, p: Poly, q, ctx: RingCtx) -> Poly:
    """add / mul / scalar-mul in normal form.  Contexts must agree."""
    if p.ctx != ctx:
        raise ContextMismatchError("operand context differs from target context")
    if kind == "scalar-mul":
        c = Fraction(q)
        return Poly.from_dict(ctx, {e: v * c for e, v in p.terms})
    if not isinstance(q, Poly) or q.ctx != ctx:
        raise ContextMismatchError("operand context differs from target context")
    if kind == "add":
        d = dict(p.terms)
        for e, c in q.terms:
            nc = d.get(e, Fraction(0)) + c
            if nc == 0:
                d.pop(e, None)
            else:
                d[e] = nc
        return Poly.from_dict(ctx, d)
    if kind == "mul":
        d: dict = {}
        for e1, c1 in p.terms:
            for e2, c2 in q.terms:
                e = tuple(a + b for a, b in zip(e1, e2))
                d[e] = d.get(e, Fraction(0)) + c1 * c2
        if ctx.kind == SPECIALIZED:
            return _reduce_mod_potential({e[0]: c for e, c in d.items()}, ctx)
        return Poly.from_dict(ctx, d)
    raise MalformedInputError(f"unknown ring operation {kind!r}")


def term_degree(ctx: RingCtx, exps: Tuple[int, ...]) -> int:
    """Quantum degree of a single equivariant monomial: deg x = 2,
    deg a_i = 2(n - i)."""
    deg = 2 * exps[0]
    for i in range(1, ctx.nvars):
        deg += 2 * (ctx.n - i) * exps[i]
    return deg


def quantum_degree(p: Poly) -> Optional[int]:
    """Quantum degree of a nonzero polynomial.

    Equivariant: the common degree of all terms, or None if inhomogeneous.
    Specialized: the quantum filtration level of the coset representative,
    i.e. 2 * (maximal x-exponent).
    """
    if p.is_zero():
        raise UndefinedDegreeError("the zero polynomial has no quantum degree")
    if p.ctx.kind == SPECIALIZED:
        return 2 * max(e[0] for e, _ in p.terms)
    degs = {term_degree(p.ctx, e) for e, _ in p.terms}
    if len(degs) == 1:
        return degs.pop()
    return None


def evaluate_poly(p: Poly, potential: Iterable[Rational]) -> Poly:
    """Specialize an equivariant polynomial: a_i -> coefficient of x^i in
    the monic potential, then reduce mod dw."""
    if p.ctx.kind != EQUIVARIANT:
        raise ContextMismatchError("evaluate_poly needs an equivariant polynomial")
    pot = tuple(Fraction(c) for c in potential)
    tgt = specialized_ctx(p.ctx.n, pot)
    coeffs: dict = {}
    for e, c in p.terms:
        val = c
        for i in range(1, p.ctx.nvars):
            if e[i]:
                val *= pot[i] ** e[i]
        xe = e[0]
        coeffs[xe] = coeffs.get(xe, Fraction(0)) + val
    return _reduce_mod_potential(coeffs, tgt)


def potential_derivative(ctx: RingCtx, order: int = 1) -> Poly:
    """Formal x-derivative of dw = x^n + a_{n-1} x^{n-1} + ... + a0 of the
    given order, as an equivariant polynomial (a0 drops out for order >= 1)."""
    if ctx.kind != EQUIVARIANT:
        raise ContextMismatchError("potential_derivative needs an equivariant context")
    if order < 1:
        raise MalformedInputError("order must be >= 1")
    n = ctx.n
    raw: RawPoly = {}

    def falling(k: int, r: int) -> int:
        v = 1
        for j in range(r):
            v *= k - j
        return v

    if n - order >= 0:
        key = (("x", n - order),) if n - order > 0 else ()
        raw[key] = Fraction(falling(n, order))
    for i in range(1, n):
        if i - order >= 0:
            e = [(f"a{i}", 1)]
            if i - order > 0:
                e.append(("x", i - order))
            raw[tuple(sorted(e))] = Fraction(falling(i, order))
    return normalize(raw, ctx)


# ---------------------------------------------------------------------------
# text grammar: rational literals p/q, variables x and a0..a{n-1},
# operators + - * ^, parentheses; juxtaposition is not allowed.


def parse_raw(text: str) -> RawPoly:
    """Parse polynomial text into a raw polynomial (context-independent)."""
    tokens = _tokenize(text)
    pos = [0]

    def peek():
        return tokens[pos[0]] if pos[0] < len(tokens) else None

    def advance():
        pos[0] += 1

    def expr() -> RawPoly:
        t = peek()
        if t in ("+", "-"):
            advance()
            first = _raw_scale(term(), Fraction(-1 if t == "-" else 1))
        else:
            first = term()
        out = first
        while peek() in ("+", "-"):
            op = peek()
            advance()
            nxt = term()
            out = _raw_add(out, _raw_scale(nxt, Fraction(-1 if op == "-" else 1)))
        return out

    def term() -> RawPoly:
        out = factor()
        while peek() == "*":
            advance()
            out = _raw_mul(out, factor())
        return out

    def factor() -> RawPoly:
        base = atom()
        if peek() == "^":
            advance()
            t = peek()
            if not isinstance(t, Fraction) or t.denominator != 1 or t < 0:
                raise MalformedInputError("exponent must be a non-negative integer")
            advance()
            out = raw_const(1)
            for _ in range(int(t)):
                out = _raw_mul(out, base)
            return out
        return base

    def atom() -> RawPoly:
        t = peek()
        if t == "(":
            advance()
            inner = expr()
            if peek() != ")":
                raise MalformedInputError("unbalanced parentheses")
            advance()
            return inner
        if isinstance(t, Fraction):
            advance()
            return raw_const(t)
        if isinstance(t, str) and (t == "x" or t.startswith("a")):
            advance()
            return raw_var(t)
        raise MalformedInputError(f"unexpected token {t!r} in polynomial")

    result = expr()
    if pos[0] != len(tokens):
        raise MalformedInputError(f"trailing input at token {peek()!r}")
    return result


def _tokenize(text: str):
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch in "+-*^()":
            tokens.append(ch)
            i += 1
        elif ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            num = int(text[i:j])
            if j < len(text) and text[j] == "/":
                k = j + 1
                while k < len(text) and text[k].isdigit():
                    k += 1
                if k == j + 1:
                    raise MalformedInputError("expected denominator after '/'")
                tokens.append(Fraction(num, int(text[j + 1:k])))
                i = k
            else:
                tokens.append(Fraction(num))
                i = j
        elif ch.isalpha():
            j = i
            while j < len(text) and (text[j].isalnum()):
                j += 1
            tokens.append(text[i:j])
            i = j
        else:
            raise MalformedInputError(f"bad character {ch!r} in polynomial")
    return tokens


def parse_poly(text: str, ctx: RingCtx) -> Poly:
    return normalize(parse_raw(text), ctx)


def format_poly(p: Poly) -> str:
    """Deterministic rendering, parseable by parse_poly."""
    if p.is_zero():
        return "0"
    names = p.ctx.var_names()
    parts = []
    for exps, coeff in p.terms:
        factors = []
        for name, e in zip(names, exps):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        mag = abs(coeff)
        if not factors or mag != 1:
            factors.insert(0, str(mag))
        body = "*".join(factors)
        parts.append(("- " if coeff < 0 else "+ ") + body)
    out = " ".join(parts)
    return out[2:] if out.startswith("+ ") else ("-" + out[2:])
