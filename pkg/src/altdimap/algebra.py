"""Exact arithmetic: sparse polynomials with rational coefficients and Q(zeta_6)."""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping

from .errors import FormatError, SymbolicEntry

# Parameter names in exponent-vector order.
PARAMS = ("w", "x", "y", "z", "a", "b", "c", "d", "e", "f", "g", "h", "i", "j", "k", "l")
# Order in which variables are written inside a monomial.
_PRINT_ORDER = ("a", "b", "c", "d", "e", "f", "g", "h", "i", "j", "k", "l", "w", "x", "y", "z")


def as_scalar(value):
    """Coerce ints, strings like '3/4' and Fractions to Fraction; pass others through."""
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    return value


class Cyclotomic6:
    """An element p + q*zeta of Q(zeta), zeta a primitive sixth root of unity.

    zeta satisfies zeta^2 = zeta - 1, and its complex conjugate is 1 - zeta.
    """

    __slots__ = ("p", "q")

    def __init__(self, p=0, q=0):
        self.p = Fraction(p)
        self.q = Fraction(q)

    @classmethod
    def zeta(cls) -> "Cyclotomic6":
        return cls(0, 1)

    @staticmethod
    def _lift(other):
        if isinstance(other, Cyclotomic6):
            return other
        if isinstance(other, (int, Fraction)):
            return Cyclotomic6(other, 0)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return Cyclotomic6(self.p + o.p, self.q + o.q)

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic6(-self.p, -self.q)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return Cyclotomic6(self.p - o.p, self.q - o.q)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        # (p1 + q1 z)(p2 + q2 z) with z^2 = z - 1
        qq = self.q * o.q
        return Cyclotomic6(self.p * o.p - qq, self.p * o.q + self.q * o.p + qq)

    __rmul__ = __mul__

    def conjugate(self) -> "Cyclotomic6":
        return Cyclotomic6(self.p + self.q, -self.q)

    def norm(self) -> Fraction:
        return self.p * self.p + self.p * self.q + self.q * self.q

    def inverse(self) -> "Cyclotomic6":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("zero has no inverse")
        c = self.conjugate()
        return Cyclotomic6(c.p / n, c.q / n)

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result, base = Cyclotomic6(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.p == o.p and self.q == o.q

    def __hash__(self):
        return hash(self.p) if self.q == 0 else hash((self.p, self.q))

    def __bool__(self):
        return bool(self.p or self.q)

    def __repr__(self):
        return f"Cyclotomic6({self.p}, {self.q})"

    def __str__(self):
        if not self.q:
            return str(self.p)
        zt = "zeta" if self.q == 1 else f"-zeta" if self.q == -1 else f"{self.q}*zeta"
        if not self.p:
            return zt
        sign = " - " if self.q < 0 else " + "
        zt = zt.lstrip("-")
        return f"{self.p}{sign}{zt}"


def zeta_pow(n: int) -> Cyclotomic6:
    """zeta**n, reduced with zeta**6 = 1."""
    n %= 6
    result = Cyclotomic6(1)
    for _ in range(n):
        result = result * Cyclotomic6.zeta()
    return result


class Poly:
    """Sparse polynomial with Fraction coefficients over a fixed tuple of variables.

    Terms map exponent tuples to nonzero coefficients. Instances are immutable.
    """

    __slots__ = ("variables", "terms", "_hash")

    def __init__(self, variables: tuple[str, ...], terms: Mapping[tuple[int, ...], Fraction] | None = None):
        self.variables = variables
        clean = {}
        if terms:
            for exps, c in terms.items():
                if c:
                    clean[tuple(exps)] = Fraction(c)
        self.terms = clean
        self._hash = None

    # construction helpers
    @classmethod
    def constant(cls, variables, value) -> "Poly":
        return cls(variables, {(0,) * len(variables): Fraction(value)})

    @classmethod
    def var(cls, variables, name: str) -> "Poly":
        exps = [0] * len(variables)
        exps[variables.index(name)] = 1
        return cls(variables, {tuple(exps): Fraction(1)})

    def _lift(self, other):
        if isinstance(other, Poly):
            if other.variables != self.variables:
                raise ValueError("polynomials over different variable sets")
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.constant(self.variables, other)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        terms = dict(self.terms)
        for exps, c in o.terms.items():
            terms[exps] = terms.get(exps, 0) + c
        return Poly(self.variables, terms)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        terms: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return Poly(self.variables, terms)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly.constant(self.variables, 1)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        o = self._lift(other) if isinstance(other, (Poly, int, Fraction)) else None
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.variables, frozenset(self.terms.items())))
        return self._hash

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def substitute(self, assignment: Mapping[str, object]):
        """Evaluate variables listed in ``assignment``; others stay symbolic.

        Returns a scalar when every variable occurring in the polynomial is
        assigned a scalar, otherwise a polynomial.
        """
        idx = {v: n for n, v in enumerate(self.variables)}
        values = {idx[k]: as_scalar(v) for k, v in assignment.items() if k in idx}
        total = 0
        for exps, c in self.terms.items():
            term = c
            rest = list(exps)
            for n, p in enumerate(exps):
                if p and n in values:
                    term = term * (values[n] ** p)
                    rest[n] = 0
            if any(rest):
                term = Poly(self.variables, {tuple(rest): Fraction(1)}) * term
            total = total + term
        return total

    def sort_key(self, exps):
        # higher total degree first; among equal degrees, ascending by the
        # exponent vector read from the last variable to the first
        return (-sum(exps), tuple(reversed(exps)))

    def render(self) -> str:
        if not self.terms:
            return "0"
        order = [self.variables.index(v) for v in _PRINT_ORDER if v in self.variables]
        order += [n for n in range(len(self.variables)) if n not in order]
        out = []
        for exps in sorted(self.terms, key=self.sort_key):
            c = self.terms[exps]
            factors = []
            for n in order:
                p = exps[n]
                if p == 1:
                    factors.append(self.variables[n])
                elif p > 1:
                    factors.append(f"{self.variables[n]}^{p}")
            mono = "*".join(factors)
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not out:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append((" - " if c < 0 else " + ") + body)
        return "".join(out)

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"Poly({self.render()!r})"


_TERM_RE = re.compile(r"\s*([+-])?\s*([^+-]+)")


def parse_poly(text: str, variables: tuple[str, ...] = PARAMS) -> Poly:
    """Parse the output of :meth:`Poly.render` back into a polynomial."""
    text = text.strip()
    if not text:
        raise FormatError("empty polynomial text")
    result = Poly(variables)
    pos = 0
    first = True
    while pos < len(text):
        m = _TERM_RE.match(text, pos)
        if not m or m.end() == pos:
            raise FormatError(f"cannot parse polynomial near {text[pos:]!r}")
        sign, body = m.group(1), m.group(2).strip()
        if sign is None and not first:
            raise FormatError(f"missing operator before {body!r}")
        first = False
        coeff = Fraction(-1 if sign == "-" else 1)
        exps = [0] * len(variables)
        for factor in body.split("*"):
            factor = factor.strip()
            if not factor:
                raise FormatError(f"empty factor in {body!r}")
            if factor[0].isdigit():
                coeff *= Fraction(factor)
                continue
            name, _, power = factor.partition("^")
            if name not in variables:
                raise FormatError(f"unknown variable {name!r}")
            exps[variables.index(name)] += int(power) if power else 1
        result = result + Poly(variables, {tuple(exps): coeff})
        pos = m.end()
    return result


def multipoly_var(name: str) -> Poly:
    return Poly.var(PARAMS, name)


BIVARS = ("x", "y")


def bipoly_var(name: str) -> Poly:
    return Poly.var(BIVARS, name)


def bipoly(terms: Mapping[tuple[int, int], object]) -> Poly:
    return Poly(BIVARS, {k: Fraction(v) for k, v in terms.items()})


class ParamSeq16:
    """An assignment to (w, x, y, z, a, ..., l); entries are symbols or scalars.

    A symbolic entry is a parameter name string. User input may only make a
    parameter symbolic as itself; permuting a sequence (as triality does) can
    move symbols between slots.
    """

    def __init__(self, values: Mapping[str, object] | None = None, **kwargs):
        merged = dict(values or {})
        merged.update(kwargs)
        unknown = set(merged) - set(PARAMS)
        if unknown:
            raise KeyError(f"unknown parameters: {sorted(unknown)}")
        entries = {}
        for name in PARAMS:
            v = merged.get(name, name)
            if isinstance(v, str) and v == name:
                entries[name] = name
            elif isinstance(v, str) and v in PARAMS:
                raise FormatError(f"parameter {name} may only be symbolic as itself, got {v!r}")
            else:
                entries[name] = as_scalar(v)
        self.entries = entries

    @classmethod
    def _from_entries(cls, entries: Mapping[str, object]) -> "ParamSeq16":
        obj = cls.__new__(cls)
        obj.entries = dict(entries)
        return obj

    @classmethod
    def symbolic(cls) -> "ParamSeq16":
        return cls()

    def __getitem__(self, name: str):
        return self.entries[name]

    def is_symbolic(self, name: str) -> bool:
        return isinstance(self.entries[name], str)

    def is_numeric(self) -> bool:
        return not any(self.is_symbolic(n) for n in PARAMS)

    def values(self) -> dict:
        """Ring values: symbolic entries become polynomial variables."""
        return {n: multipoly_var(v) if isinstance(v, str) else v for n, v in self.entries.items()}

    def permuted(self, order: Iterable[str]) -> "ParamSeq16":
        """Sequence whose n-th slot holds the current value of ``order[n]``."""
        return ParamSeq16._from_entries({name: self.entries[src] for name, src in zip(PARAMS, tuple(order))})

    def as_dict(self) -> dict:
        return dict(self.entries)

    def __eq__(self, other):
        return isinstance(other, ParamSeq16) and self.entries == other.entries

    def __repr__(self):
        return f"ParamSeq16({self.entries!r})"


def check_eti_conditions(params: ParamSeq16) -> dict[str, bool]:
    """Which of the four defining identities hold for a numeric sequence."""
    for n in PARAMS:
        if params.is_symbolic(n):
            raise SymbolicEntry(n)
    p = params.entries
    w, x, y, z = p["w"], p["x"], p["y"], p["z"]
    return {
        "xyz": x * y * z == p["j"] * y * z + p["k"] * x * y + p["l"] * x * z,
        "yz": y * z == p["a"] * w + p["b"] * y + p["c"] * z,
        "xz": x * z == p["d"] * z + p["e"] * x + p["f"] * w,
        "xy": x * y == p["g"] * y + p["h"] * w + p["i"] * x,
    }
