"""Commutative polynomials in x_1..x_n over the Gaussian rationals.

Multi-indices are plain tuples of non-negative ints.  Term maps never store
zero coefficients.
"""

from __future__ import annotations

import re

from .scalars import Scalar

__all__ = [
    "MultiIndex",
    "mi_add",
    "mi_sub",
    "mi_degree",
    "mi_unit",
    "Polynomial",
    "parse_polynomial",
]

MultiIndex = tuple


def mi_add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mi_sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def mi_degree(a) -> int:
    return sum(a)


def mi_unit(n: int, mu: int):
    """The exponent vector of x_mu (0-based)."""
    return tuple(1 if k == mu else 0 for k in range(n))


def _merge(dst: dict, key, coeff: Scalar):
    s = dst.get(key)
    s = coeff if s is None else s + coeff
    if s:
        dst[key] = s
    else:
        dst.pop(key, None)


class Polynomial:
    """Finite linear combination of monomials x^a with Scalar coefficients."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=None):
        self.n = n
        self.terms = {}
        if terms:
            for k, c in terms.items():
                c = Scalar.coerce(c)
                if c:
                    _merge(self.terms, tuple(k), c)

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, n):
        return cls(n)

    @classmethod
    def one(cls, n):
        return cls(n, {(0,) * n: Scalar(1)})

    @classmethod
    def variable(cls, n, mu):
        return cls(n, {mi_unit(n, mu): Scalar(1)})

    @classmethod
    def constant(cls, n, c):
        return cls(n, {(0,) * n: Scalar.coerce(c)})

    # -- structure ---------------------------------------------------------

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((mi_degree(k) for k in self.terms), default=-1)

    def homogeneous_part(self, d: int) -> "Polynomial":
        return Polynomial(
            self.n, {k: c for k, c in self.terms.items() if mi_degree(k) == d}
        )

    def coefficient(self, exps) -> Scalar:
        return self.terms.get(tuple(exps), Scalar(0))

    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other):
        if self.n != other.n:
            raise ValueError(f"dimension mismatch: {self.n} vs {other.n}")

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            _merge(out, k, c)
        p = Polynomial(self.n)
        p.terms = out
        return p

    def __sub__(self, other):
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            _merge(out, k, -c)
        p = Polynomial(self.n)
        p.terms = out
        return p

    def __neg__(self):
        p = Polynomial(self.n)
        p.terms = {k: -c for k, c in self.terms.items()}
        return p

    def __mul__(self, other):
        if isinstance(other, (Scalar, int)):
            return self.scale(Scalar.coerce(other))
        self._check(other)
        out = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                _merge(out, mi_add(k1, k2), c1 * c2)
        p = Polynomial(self.n)
        p.terms = out
        return p

    __rmul__ = __mul__

    def scale(self, c: Scalar) -> "Polynomial":
        c = Scalar.coerce(c)
        p = Polynomial(self.n)
        if c:
            p.terms = {k: v * c for k, v in self.terms.items()}
        return p

    def __pow__(self, m: int):
        out = Polynomial.one(self.n)
        for _ in range(m):
            out = out * self
        return out

    def partial(self, mu: int) -> "Polynomial":
        """Partial derivative with respect to x_mu (0-based)."""
        out = {}
        for k, c in self.terms.items():
            e = k[mu]
            if e:
                _merge(out, k[:mu] + (e - 1,) + k[mu + 1 :], c * e)
        p = Polynomial(self.n)
        p.terms = out
        return p

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and self.n == other.n
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    # -- rendering ---------------------------------------------------------

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: (mi_degree(kv[0]), kv[0]))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for k, c in self.sorted_terms():
            factors = [
                f"x{mu + 1}" + (f"^{e}" if e > 1 else "")
                for mu, e in enumerate(k)
                if e
            ]
            cs = str(c)
            if not factors:
                parts.append(cs)
            elif c == Scalar(1):
                parts.append("*".join(factors))
            elif c == Scalar(-1):
                parts.append("-" + "*".join(factors))
            else:
                if not (c.is_real() or c.re == 0):
                    cs = f"({cs})"
                parts.append(cs + "*" + "*".join(factors))
        s = " + ".join(parts).replace("+ -", "- ")
        return s

    __repr__ = __str__

    def to_json(self):
        return [
            {"exps": list(k), "coeff": str(c)} for k, c in self.sorted_terms()
        ]

    @classmethod
    def from_json(cls, n: int, data) -> "Polynomial":
        return cls(n, {tuple(t["exps"]): Scalar.parse(t["coeff"]) for t in data})


_FACTOR = re.compile(r"^(?:x(\d+))(?:\^(\d+))?$")


def parse_polynomial(text: str, n: int) -> Polynomial:
    """Parse text such as "x1*x2 + 1/2*x2 - 3" (also accepts "·" for "*")."""
    s = text.replace("·", "*").replace("−", "-").replace(" ", "")
    if not s:
        raise ValueError("empty polynomial")
    # split into signed terms at top level (no parentheses supported except
    # none are emitted for real coefficients)
    terms = []
    buf = ""
    for ch in s:
        if ch in "+-" and buf and buf[-1] not in "+-*/(":
            terms.append(buf)
            buf = ch
        else:
            buf += ch
    terms.append(buf)
    out = Polynomial.zero(n)
    for term in terms:
        coeff = Scalar(1)
        exps = [0] * n
        for factor in term.lstrip("+").split("*"):
            if factor == "":
                raise ValueError(f"malformed term {term!r} in {text!r}")
            neg = False
            while factor.startswith("-"):
                neg = not neg
                factor = factor[1:]
            m = _FACTOR.match(factor)
            if m:
                mu = int(m.group(1))
                if not 1 <= mu <= n:
                    raise ValueError(f"variable x{mu} out of range 1..{n}")
                exps[mu - 1] += int(m.group(2) or 1)
            else:
                coeff = coeff * Scalar.parse(factor)
            if neg:
                coeff = -coeff
        out = out + Polynomial(n, {tuple(exps): coeff})
    return out
