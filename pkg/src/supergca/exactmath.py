"""Exact scalars over Q(i, sqrt2) with named parameters and a Laurent contraction unit.

A :class:`Scalar` is a finite sum of terms ``coef * monomial * u^k`` where
``coef`` is a :class:`BaseNumber`, ``monomial`` is a product of registered
parameters with non-negative exponents and ``u`` is the half-step contraction
unit (``u**2`` is the contraction variable).
"""

from __future__ import annotations

import re
from collections.abc import Mapping
from fractions import Fraction

from gmpy2 import is_square, isqrt, mpq

__all__ = [
    "BaseNumber",
    "CyclicAssignment",
    "DivergentLimit",
    "Scalar",
    "UnknownParameter",
    "as_scalar",
    "param",
    "register_param",
    "registered_params",
    "SQRT2",
    "sqrt2",
    "I",
    "U",
]

_ZERO = mpq(0)
_ONE = mpq(1)
_TWO = mpq(2)


def _q(x) -> mpq:
    if isinstance(x, Fraction):
        return mpq(x.numerator, x.denominator)
    return mpq(x)


class BaseNumber:
    """Element ``c0 + c1*i + c2*sqrt2 + c3*i*sqrt2`` of the field Q(i, sqrt2)."""

    __slots__ = ("c", "_hash")

    def __init__(self, c0=0, c1=0, c2=0, c3=0):
        self.c = (_q(c0), _q(c1), _q(c2), _q(c3))
        self._hash = None

    @classmethod
    def _raw(cls, c: tuple) -> BaseNumber:
        obj = object.__new__(cls)
        obj.c = c
        obj._hash = None
        return obj

    @classmethod
    def coerce(cls, x) -> BaseNumber:
        if isinstance(x, BaseNumber):
            return x
        if isinstance(x, (int, Fraction)) or type(x).__name__ == "mpq":
            return cls(x)
        if isinstance(x, str):
            return cls.parse(x)
        raise TypeError(f"cannot coerce {x!r} to BaseNumber")

    def is_zero(self) -> bool:
        c = self.c
        return not (c[0] or c[1] or c[2] or c[3])

    def __bool__(self) -> bool:
        return not self.is_zero()

    def is_rational(self) -> bool:
        c = self.c
        return not (c[1] or c[2] or c[3])

    def __add__(self, other) -> BaseNumber:
        if not isinstance(other, BaseNumber):
            other = BaseNumber.coerce(other)
        a, b = self.c, other.c
        return BaseNumber._raw((a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]))

    __radd__ = __add__

    def __neg__(self) -> BaseNumber:
        a = self.c
        return BaseNumber._raw((-a[0], -a[1], -a[2], -a[3]))

    def __sub__(self, other) -> BaseNumber:
        return self + (-BaseNumber.coerce(other))

    def __rsub__(self, other) -> BaseNumber:
        return BaseNumber.coerce(other) + (-self)

    def __mul__(self, other) -> BaseNumber:
        if not isinstance(other, BaseNumber):
            if isinstance(other, Scalar):
                return NotImplemented
            other = BaseNumber.coerce(other)
        a0, a1, a2, a3 = self.c
        b0, b1, b2, b3 = other.c
        return BaseNumber._raw(
            (
                a0 * b0 - a1 * b1 + _TWO * (a2 * b2 - a3 * b3),
                a0 * b1 + a1 * b0 + _TWO * (a2 * b3 + a3 * b2),
                a0 * b2 + a2 * b0 - a1 * b3 - a3 * b1,
                a0 * b3 + a3 * b0 + a1 * b2 + a2 * b1,
            )
        )

    __rmul__ = __mul__

    def conjugate(self) -> BaseNumber:
        a = self.c
        return BaseNumber._raw((a[0], -a[1], a[2], -a[3]))

    def inverse(self) -> BaseNumber:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(i, sqrt2)")
        a0, a1, a2, a3 = self.c
        # x = p + q*i with p, q in Q(sqrt2); x * (p - q*i) = p^2 + q^2 = r0 + r1*sqrt2
        r0 = a0 * a0 + _TWO * a2 * a2 + a1 * a1 + _TWO * a3 * a3
        r1 = _TWO * (a0 * a2 + a1 * a3)
        n = r0 * r0 - _TWO * r1 * r1
        num = BaseNumber._raw((a0, -a1, a2, -a3)) * BaseNumber._raw((r0, _ZERO, -r1, _ZERO))
        return BaseNumber._raw(tuple(x / n for x in num.c))

    def __truediv__(self, other) -> BaseNumber:
        return self * BaseNumber.coerce(other).inverse()

    def __rtruediv__(self, other) -> BaseNumber:
        return BaseNumber.coerce(other) * self.inverse()

    def __pow__(self, n: int) -> BaseNumber:
        if n < 0:
            return self.inverse() ** (-n)
        out = BaseNumber(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def sqrt(self) -> BaseNumber | None:
        """Square root when it is easy to find inside the field, else ``None``.

        Handles ``q``, ``q*i`` for rational ``q`` (and ``sqrt2`` multiples of
        perfect squares).
        """
        if self.is_zero():
            return BaseNumber(0)
        a0, a1, a2, a3 = self.c
        if not a2 and not a3 and (not a0 or not a1):
            if a1:
                # sqrt(q*i) = sqrt(q) * (1+i)/sqrt2, sqrt(-q*i) = sqrt(q) * (1-i)/sqrt2
                q = abs(a1)
                r = _rational_sqrt_in_field(q)
                if r is None:
                    return None
                zeta = BaseNumber(0, 0, mpq(1, 2), mpq(1, 2) if a1 > 0 else mpq(-1, 2))
                return r * zeta
            r = _rational_sqrt_in_field(abs(a0))
            if r is None:
                return None
            return r if a0 > 0 else r * I
        for cand in _small_sqrt_candidates():
            if cand * cand == self:
                return cand
        return None

    def __eq__(self, other) -> bool:
        if isinstance(other, BaseNumber):
            return self.c == other.c
        if isinstance(other, Scalar):
            return other == self
        try:
            return self.c == BaseNumber.coerce(other).c
        except TypeError:
            return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.c)
        return self._hash

    def to_complex(self) -> complex:
        s2 = 2**0.5
        a0, a1, a2, a3 = (float(x) for x in self.c)
        return complex(a0 + s2 * a2, a1 + s2 * a3)

    def render(self) -> str:
        return Scalar.const(self).render()

    def __repr__(self) -> str:
        return f"BaseNumber({self.render()})"

    @classmethod
    def parse(cls, text: str) -> BaseNumber:
        s = Scalar.parse(text)
        out = s.constant_value()
        if out is None:
            raise ValueError(f"not a constant: {text!r}")
        return out


def _rational_sqrt_in_field(q) -> BaseNumber | None:
    q = mpq(q)
    n, d = q.numerator, q.denominator
    if is_square(n) and is_square(d):
        return BaseNumber(mpq(isqrt(n), isqrt(d)))
    # q = 2 * m^2  ->  sqrt2 * m
    q2 = q / 2
    n, d = q2.numerator, q2.denominator
    if is_square(n) and is_square(d):
        return BaseNumber(0, 0, mpq(isqrt(n), isqrt(d)))
    return None


_CANDS: list[BaseNumber] | None = None


def _small_sqrt_candidates() -> list[BaseNumber]:
    global _CANDS
    if _CANDS is None:
        vals = [mpq(0), mpq(1), mpq(-1), mpq(1, 2), mpq(-1, 2), mpq(2), mpq(-2)]
        _CANDS = [BaseNumber(a, b, c, d) for a in vals for b in vals for c in vals for d in vals]
    return _CANDS


# ---------------------------------------------------------------------------
# parameter registry
# ---------------------------------------------------------------------------

_REGISTRY: set[str] = {"alpha", "beta", "gamma"}


class UnknownParameter(KeyError):
    pass


class CyclicAssignment(ValueError):
    pass


class DivergentLimit(ArithmeticError):
    """Raised when a limit u -> infinity is taken of a scalar with positive u-powers."""

    def __init__(self, offenders):
        self.offenders = offenders
        super().__init__("divergent terms: " + ", ".join(offenders))


def register_param(name: str) -> str:
    if not re.fullmatch(r"[A-Za-z][A-Za-z0-9_]*", name) or name in {"i", "u", "sqrt2"}:
        raise ValueError(f"invalid parameter name {name!r}")
    _REGISTRY.add(name)
    return name


def registered_params() -> tuple[str, ...]:
    return tuple(sorted(_REGISTRY))


# ---------------------------------------------------------------------------
# Scalar
# ---------------------------------------------------------------------------

Mono = tuple  # tuple[tuple[str, int], ...] sorted by name
_EMPTY: Mono = ()
_UNIT_KEY = (_EMPTY, 0)


def _mono_mul(m1: Mono, m2: Mono) -> Mono:
    if not m1:
        return m2
    if not m2:
        return m1
    d = dict(m1)
    for name, e in m2:
        d[name] = d.get(name, 0) + e
    return tuple(sorted(d.items()))


class Scalar:
    """Immutable sparse sum of ``BaseNumber * parameter monomial * u^k`` terms."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping | None = None):
        clean = {}
        if terms:
            for key, coef in terms.items():
                coef = BaseNumber.coerce(coef)
                if not coef.is_zero():
                    clean[key] = coef
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> Scalar:
        obj = object.__new__(cls)
        obj.terms = terms
        obj._hash = None
        return obj

    # constructors --------------------------------------------------------
    @classmethod
    def const(cls, x) -> Scalar:
        b = BaseNumber.coerce(x)
        return cls._raw({_UNIT_KEY: b} if not b.is_zero() else {})

    @classmethod
    def param(cls, name: str, power: int = 1) -> Scalar:
        if name not in _REGISTRY:
            raise UnknownParameter(name)
        return cls._raw({(((name, power),), 0): BaseNumber(1)})

    @classmethod
    def upow(cls, k: int) -> Scalar:
        return cls._raw({(_EMPTY, k): BaseNumber(1)})

    # predicates ----------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def constant_value(self) -> BaseNumber | None:
        """The BaseNumber value if the scalar has no parameters and no u-powers."""
        if not self.terms:
            return BaseNumber(0)
        if len(self.terms) == 1 and _UNIT_KEY in self.terms:
            return self.terms[_UNIT_KEY]
        return None

    def params(self) -> set[str]:
        return {name for (mono, _k) in self.terms for name, _e in mono}

    def u_powers(self) -> set[int]:
        return {k for (_mono, k) in self.terms}

    # arithmetic ----------------------------------------------------------
    def __add__(self, other) -> Scalar:
        if not isinstance(other, Scalar):
            other = as_scalar(other)
        if not other.terms:
            return self
        if not self.terms:
            return other
        out = dict(self.terms)
        for key, coef in other.terms.items():
            prev = out.get(key)
            if prev is None:
                out[key] = coef
            else:
                s = prev + coef
                if s.is_zero():
                    del out[key]
                else:
                    out[key] = s
        return Scalar._raw(out)

    __radd__ = __add__

    def __neg__(self) -> Scalar:
        return Scalar._raw({k: -v for k, v in self.terms.items()})

    def __sub__(self, other) -> Scalar:
        return self + (-as_scalar(other))

    def __rsub__(self, other) -> Scalar:
        return as_scalar(other) + (-self)

    def __mul__(self, other) -> Scalar:
        if not isinstance(other, Scalar):
            other = as_scalar(other)
        a, b = self.terms, other.terms
        if not a or not b:
            return Scalar._raw({})
        if len(b) == 1 and _UNIT_KEY in b:
            c = b[_UNIT_KEY]
            return Scalar._raw({k: v * c for k, v in a.items()})
        if len(a) == 1 and _UNIT_KEY in a:
            c = a[_UNIT_KEY]
            return Scalar._raw({k: c * v for k, v in b.items()})
        out: dict = {}
        for (m1, k1), c1 in a.items():
            for (m2, k2), c2 in b.items():
                key = (_mono_mul(m1, m2), k1 + k2)
                prod = c1 * c2
                prev = out.get(key)
                out[key] = prod if prev is None else prev + prod
        return Scalar._raw({k: v for k, v in out.items() if not v.is_zero()})

    __rmul__ = __mul__

    def __truediv__(self, other) -> Scalar:
        o = as_scalar(other)
        inv = o.inverse()
        return self * inv

    def inverse(self) -> Scalar:
        """Inverse of a single-term scalar without parameters."""
        if len(self.terms) != 1:
            raise ZeroDivisionError(f"scalar {self.render()} is not a unit")
        ((mono, k), coef), = self.terms.items()
        if mono:
            raise ZeroDivisionError(f"scalar {self.render()} is not a unit")
        return Scalar._raw({(_EMPTY, -k): coef.inverse()})

    def __pow__(self, n: int) -> Scalar:
        if n < 0:
            return self.inverse() ** (-n)
        out = Scalar.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def conjugate(self) -> Scalar:
        """Antilinear involution: i -> -i; sqrt2, parameters and u are fixed."""
        return Scalar._raw({k: v.conjugate() for k, v in self.terms.items()})

    def times_upow(self, k: int) -> Scalar:
        if not k:
            return self
        return Scalar._raw({(m, kk + k): v for (m, kk), v in self.terms.items()})

    # evaluation ----------------------------------------------------------
    def substitute(self, assignment: Mapping[str, object]) -> Scalar:
        assignment = {name: as_scalar(v) for name, v in assignment.items()}
        for name in assignment:
            if name not in _REGISTRY:
                raise UnknownParameter(name)
        for name, value in assignment.items():
            clash = value.params() & set(assignment)
            if clash:
                raise CyclicAssignment(f"value for {name!r} mentions {sorted(clash)}")
        out = Scalar._raw({})
        for (mono, k), coef in self.terms.items():
            term = Scalar._raw({(_EMPTY, k): coef})
            rest = []
            for name, e in mono:
                if name in assignment:
                    term = term * assignment[name] ** e
                else:
                    rest.append((name, e))
            if rest:
                term = term * Scalar._raw({(tuple(rest), 0): BaseNumber(1)})
            out = out + term
        return out

    def limit_at_infinity(self) -> Scalar:
        """Limit u -> infinity; raises :class:`DivergentLimit` on positive powers."""
        bad = [(key, c) for key, c in self.terms.items() if key[1] > 0]
        if bad:
            raise DivergentLimit([Scalar._raw({key: c}).render() for key, c in sorted(bad, key=_term_sort)])
        return Scalar._raw({key: c for key, c in self.terms.items() if key[1] == 0})

    def u_coefficient(self, k: int) -> Scalar:
        return Scalar._raw({(m, 0): c for (m, kk), c in self.terms.items() if kk == k})

    # comparison ----------------------------------------------------------
    def __eq__(self, other) -> bool:
        if not isinstance(other, Scalar):
            try:
                other = as_scalar(other)
            except TypeError:
                return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    # rendering -----------------------------------------------------------
    def render(self) -> str:
        if not self.terms:
            return "0"
        parts: list[tuple[bool, str]] = []
        for key in sorted(self.terms, key=_key_sort):
            mono, k = key
            coef = self.terms[key]
            for unit, q in zip(_UNITS, coef.c):
                if not q:
                    continue
                factors = [n if e == 1 else f"{n}^{e}" for n, e in mono]
                if k:
                    factors.append("u" if k == 1 else f"u^{k}")
                neg = q < 0
                q = abs(q)
                head = []
                if q != 1 or (not unit and not factors):
                    head.append(str(q) if q.denominator == 1 else f"({q.numerator}/{q.denominator})")
                if unit:
                    head.append(unit)
                parts.append((neg, "*".join(head + factors)))
        first_neg, first = parts[0]
        out = ("-" if first_neg else "") + first
        for neg, body in parts[1:]:
            out += (" - " if neg else " + ") + body
        return out

    __str__ = render

    def __repr__(self) -> str:
        return f"Scalar({self.render()})"

    _TOKEN = re.compile(
        r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<name>[A-Za-z][A-Za-z0-9_]*)|(?P<op>[-+*^()])|(?P<end>$))"
    )

    @classmethod
    def parse(cls, text: str) -> Scalar:
        """Parse the canonical rendering (and simple variants of it)."""
        tokens = []
        pos = 0
        while True:
            m = cls._TOKEN.match(text, pos)
            if not m:
                raise ValueError(f"cannot parse scalar {text!r} at {pos}")
            if m.group("end") is not None and m.end() == len(text):
                break
            pos = m.end()
            if m.group("num"):
                tokens.append(("num", m.group("num")))
            elif m.group("name"):
                tokens.append(("name", m.group("name")))
            else:
                tokens.append(("op", m.group("op")))
        return _Parser(tokens).parse_sum()


_UNITS = ("", "i", "sqrt2", "i*sqrt2")


def _key_sort(key):
    mono, k = key
    return (k, len(mono), mono)


def _term_sort(item):
    return _key_sort(item[0])


class _Parser:
    def __init__(self, tokens):
        self.toks = tokens
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def parse_sum(self) -> Scalar:
        out = Scalar._raw({})
        sign = 1
        kind, val = self.peek()
        if kind == "op" and val in "+-":
            self.take()
            sign = -1 if val == "-" else 1
        out = out + self.parse_product() * sign
        while True:
            kind, val = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                term = self.parse_product()
                out = out + (term if val == "+" else -term)
            else:
                break
        if self.i < len(self.toks) and self.peek() != ("op", ")"):
            raise ValueError(f"trailing tokens in scalar: {self.toks[self.i:]}")
        return out

    def parse_product(self) -> Scalar:
        out = self.parse_power()
        while self.peek() == ("op", "*"):
            self.take()
            out = out * self.parse_power()
        return out

    def parse_power(self) -> Scalar:
        base = self.parse_atom()
        if self.peek() == ("op", "^"):
            self.take()
            sign = 1
            if self.peek() == ("op", "-"):
                self.take()
                sign = -1
            kind, val = self.take()
            if kind != "num" or "/" in val:
                raise ValueError("exponent must be an integer")
            return base ** (sign * int(val))
        return base

    def parse_atom(self) -> Scalar:
        kind, val = self.take()
        if kind == "num":
            return Scalar.const(mpq(val))
        if kind == "name":
            if val == "i":
                return Scalar.const(I)
            if val == "sqrt2":
                return Scalar.const(SQRT2)
            if val == "u":
                return Scalar.upow(1)
            return Scalar.param(val)
        if (kind, val) == ("op", "("):
            inner = self.parse_sum()
            if self.take() != ("op", ")"):
                raise ValueError("unbalanced parenthesis")
            return inner
        if (kind, val) == ("op", "-"):
            return -self.parse_atom()
        raise ValueError(f"unexpected token {val!r}")


def as_scalar(x) -> Scalar:
    if isinstance(x, Scalar):
        return x
    if isinstance(x, str):
        return Scalar.parse(x)
    return Scalar.const(x)


def param(name: str) -> Scalar:
    return Scalar.param(name)


I = BaseNumber(0, 1)
SQRT2 = BaseNumber(0, 0, 1)
sqrt2 = SQRT2
U = Scalar.upow(1)
