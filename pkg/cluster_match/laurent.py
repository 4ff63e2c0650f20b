"""
Exact two-variable Laurent polynomials with integer coefficients.

A ``LaurentPolynomial`` is an immutable sparse map from exponent pairs
``(e1, e2)`` (the powers of ``x1`` and ``x2``, either may be negative) to
nonzero Python integers. Python integers are arbitrary precision, so no
arithmetic here ever overflows or rounds.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List, Mapping, Tuple

from .types import NonUnitAtNegativeExponent, NotDivisible, ParseError

Exponent = Tuple[int, int]


def _grlex_key(e: Exponent) -> Tuple[int, int, int]:
    return (e[0] + e[1], e[0], e[1])


class LaurentPolynomial:
    """
    Sparse Laurent polynomial in x1, x2 over the integers.

    Equality is term-set equality; zero coefficients are never stored.
    Instances compare equal to plain integers when they are constants.

    Example:
        ```python
        x1, x2 = LaurentPolynomial.x1(), LaurentPolynomial.x2()
        p = (x2 + 1) ** 4 + x1 ** 4
        q = div_exact(p, x1 ** 4 * x2)
        ```
    """

    __slots__ = ("_terms", "_hash")

    _terms: Dict[Exponent, int]

    def __init__(self, terms: Mapping[Exponent, int] | None = None):
        clean: Dict[Exponent, int] = {}
        if terms:
            for (e1, e2), c in terms.items():
                if c:
                    clean[(int(e1), int(e2))] = int(c)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: Dict[Exponent, int]) -> "LaurentPolynomial":
        # caller guarantees no zero coefficients
        p = LaurentPolynomial.__new__(LaurentPolynomial)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def zero(cls) -> "LaurentPolynomial":
        return cls._raw({})

    @classmethod
    def one(cls) -> "LaurentPolynomial":
        return cls._raw({(0, 0): 1})

    @classmethod
    def constant(cls, c: int) -> "LaurentPolynomial":
        return cls._raw({(0, 0): c} if c else {})

    @classmethod
    def monomial(cls, e1: int = 0, e2: int = 0, coeff: int = 1) -> "LaurentPolynomial":
        return cls._raw({(e1, e2): coeff} if coeff else {})

    @classmethod
    def x1(cls) -> "LaurentPolynomial":
        return cls._raw({(1, 0): 1})

    @classmethod
    def x2(cls) -> "LaurentPolynomial":
        return cls._raw({(0, 1): 1})

    @classmethod
    def from_terms(cls, terms: Iterable[Tuple[int, int, int]]) -> "LaurentPolynomial":
        """Build from (e1, e2, coeff) triples, summing repeated exponents"""
        acc: Dict[Exponent, int] = {}
        for e1, e2, c in terms:
            key = (e1, e2)
            acc[key] = acc.get(key, 0) + c
        return cls(acc)

    @property
    def terms(self) -> Dict[Exponent, int]:
        """A copy of the exponent -> coefficient map"""
        return dict(self._terms)

    def coefficient(self, e1: int, e2: int) -> int:
        return self._terms.get((e1, e2), 0)

    def canonical_terms(self) -> List[Tuple[int, int, int]]:
        """Terms as (e1, e2, coeff), graded lexicographic, descending"""
        keys = sorted(self._terms, key=_grlex_key, reverse=True)
        return [(e1, e2, self._terms[(e1, e2)]) for e1, e2 in keys]

    def __iter__(self) -> Iterator[Tuple[int, int, int]]:
        return iter(self.canonical_terms())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_monomial(self) -> bool:
        """Exactly one term with coefficient 1"""
        return len(self._terms) == 1 and next(iter(self._terms.values())) == 1

    @property
    def is_polynomial(self) -> bool:
        return all(e1 >= 0 and e2 >= 0 for e1, e2 in self._terms)

    def min_exponents(self) -> Exponent:
        if not self._terms:
            return (0, 0)
        return (
            min(e1 for e1, _ in self._terms),
            min(e2 for _, e2 in self._terms),
        )

    def max_exponents(self) -> Exponent:
        if not self._terms:
            return (0, 0)
        return (
            max(e1 for e1, _ in self._terms),
            max(e2 for _, e2 in self._terms),
        )

    def shift(self, d1: int, d2: int) -> "LaurentPolynomial":
        """Multiply by x1^d1 * x2^d2"""
        if d1 == 0 and d2 == 0:
            return self
        return LaurentPolynomial._raw(
            {(e1 + d1, e2 + d2): c for (e1, e2), c in self._terms.items()}
        )

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPolynomial.constant(other)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            # constants hash like the ints they compare equal to
            if not self._terms:
                self._hash = hash(0)
            elif len(self._terms) == 1 and (0, 0) in self._terms:
                self._hash = hash(self._terms[(0, 0)])
            else:
                self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self):
        return f"LaurentPolynomial({format_laurent(self)!r})"

    def __str__(self):
        return format_laurent(self)

    def __neg__(self) -> "LaurentPolynomial":
        return LaurentPolynomial._raw({e: -c for e, c in self._terms.items()})

    def __add__(self, other) -> "LaurentPolynomial":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return ring_op(self, other, "add")

    __radd__ = __add__

    def __sub__(self, other) -> "LaurentPolynomial":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return ring_op(self, other, "sub")

    def __rsub__(self, other) -> "LaurentPolynomial":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return ring_op(other, self, "sub")

    def __mul__(self, other) -> "LaurentPolynomial":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return ring_op(self, other, "mul")

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPolynomial":
        return pow(self, k)

    def __floordiv__(self, other) -> "LaurentPolynomial":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return div_exact(self, other)


class Monomial(LaurentPolynomial):
    """
    A single term x1^e1 * x2^e2 with coefficient 1.
    """

    __slots__ = ()

    def __init__(self, e1: int = 0, e2: int = 0):
        super().__init__({(e1, e2): 1})

    @property
    def e1(self) -> int:
        return next(iter(self._terms))[0]

    @property
    def e2(self) -> int:
        return next(iter(self._terms))[1]

    @staticmethod
    def of(p: LaurentPolynomial) -> "Monomial":
        if not p.is_monomial:
            raise ValueError(f"Not a monomial: {p}")
        (e1, e2), = p._terms
        return Monomial(e1, e2)


def _coerce(value) -> LaurentPolynomial | None:
    if isinstance(value, LaurentPolynomial):
        return value
    if isinstance(value, int):
        return LaurentPolynomial.constant(value)
    return None


def ring_op(a: LaurentPolynomial, b: LaurentPolynomial, op: str) -> LaurentPolynomial:
    """
    Exact add, sub or mul; zero-coefficient terms are pruned.
    """
    if op == "mul":
        if not a._terms or not b._terms:
            return LaurentPolynomial.zero()
        if len(a._terms) < len(b._terms):
            a, b = b, a
        out: Dict[Exponent, int] = {}
        for (f1, f2), d in b._terms.items():
            for (e1, e2), c in a._terms.items():
                key = (e1 + f1, e2 + f2)
                out[key] = out.get(key, 0) + c * d
        return LaurentPolynomial._raw({e: c for e, c in out.items() if c})
    if op == "add":
        sign = 1
    elif op == "sub":
        sign = -1
    else:
        raise ValueError(f"Unknown ring operation: {op}")
    out = dict(a._terms)
    for e, c in b._terms.items():
        v = out.get(e, 0) + sign * c
        if v:
            out[e] = v
        else:
            out.pop(e, None)
    return LaurentPolynomial._raw(out)


def pow(a: LaurentPolynomial, k: int) -> LaurentPolynomial:
    """
    k-fold product of ``a``; ``pow(a, 0)`` is 1 for every ``a``.
    """
    if k < 0:
        raise ValueError(f"Exponent must be nonnegative, got {k}")
    if len(a._terms) == 1:
        (e1, e2), c = next(iter(a._terms.items()))
        return LaurentPolynomial.monomial(e1 * k, e2 * k, c**k)
    result = LaurentPolynomial.one()
    base = a
    while k:
        if k & 1:
            result = result * base
        k >>= 1
        if k:
            base = base * base
    return result


def div_exact(a: LaurentPolynomial, b: LaurentPolynomial) -> LaurentPolynomial:
    """
    Return q with q * b == a, or raise NotDivisible.

    Both operands are shifted into ordinary polynomials, ``b`` so that it has
    no monomial factor. The quotient of two such polynomials is a Laurent
    polynomial only if it is an ordinary polynomial, so plain long division
    in lexicographic order (x1 before x2) decides divisibility.
    """
    if b.is_zero:
        raise NotDivisible("Division by the zero polynomial")
    if a.is_zero:
        return LaurentPolynomial.zero()
    if len(b._terms) == 1:
        (f1, f2), d = next(iter(b._terms.items()))
        out = {}
        for (e1, e2), c in a._terms.items():
            q, r = divmod(c, d)
            if r:
                raise NotDivisible(f"Coefficient {c} is not divisible by {d}")
            out[(e1 - f1, e2 - f2)] = q
        return LaurentPolynomial._raw(out)

    a1, a2 = a.min_exponents()
    b1, b2 = b.min_exponents()
    num = dict(a.shift(-a1, -a2)._terms)
    den = b.shift(-b1, -b2)._terms
    lead = max(den, key=lambda e: (e[0], e[1]))
    lead_c = den[lead]

    quotient: Dict[Exponent, int] = {}
    while num:
        top = max(num, key=lambda e: (e[0], e[1]))
        t1, t2 = top[0] - lead[0], top[1] - lead[1]
        q, r = divmod(num[top], lead_c)
        if t1 < 0 or t2 < 0 or r:
            raise NotDivisible(f"{format_laurent(a)} is not divisible by {format_laurent(b)}")
        quotient[(t1, t2)] = q
        for (f1, f2), d in den.items():
            key = (f1 + t1, f2 + t2)
            v = num.get(key, 0) - q * d
            if v:
                num[key] = v
            else:
                num.pop(key, None)
    return LaurentPolynomial._raw(quotient).shift(a1 - b1, a2 - b2)


def _unit_power(v: int, e: int) -> int:
    if e >= 0:
        return v**e
    if v not in (1, -1):
        raise NonUnitAtNegativeExponent(
            f"Cannot evaluate a negative power at {v}: only 1 and -1 are integer units"
        )
    return v ** (-e)


def eval(a: LaurentPolynomial, v1: int, v2: int) -> int:
    """
    Exact integer value of ``a`` at x1 = v1, x2 = v2.
    """
    return sum(c * _unit_power(v1, e1) * _unit_power(v2, e2) for (e1, e2), c in a._terms.items())


def swap_vars(a: LaurentPolynomial) -> LaurentPolynomial:
    """Exchange x1 and x2"""
    return LaurentPolynomial._raw({(e2, e1): c for (e1, e2), c in a._terms.items()})


def is_strictly_positive(a: LaurentPolynomial) -> bool:
    """Nonzero with every coefficient a positive integer"""
    return bool(a._terms) and all(c > 0 for c in a._terms.values())


def split_denominator(a: LaurentPolynomial) -> Tuple[LaurentPolynomial, Monomial]:
    """
    Write ``a`` as numerator / monomial with a polynomial numerator that has
    no x1 or x2 factor coming from the shift.
    """
    m1, m2 = a.min_exponents()
    d1, d2 = max(0, -m1), max(0, -m2)
    return a.shift(d1, d2), Monomial(d1, d2)


# Text form


def _format_factor(var: str, e: int) -> str:
    return var if e == 1 else f"{var}^{e}"


def format_term(e1: int, e2: int, c: int) -> str:
    """Unsigned text for one term, using |c|"""
    factors = []
    c = abs(c)
    if e1:
        factors.append(_format_factor("x1", e1))
    if e2:
        factors.append(_format_factor("x2", e2))
    if not factors:
        return str(c)
    if c != 1:
        factors.insert(0, str(c))
    return "*".join(factors)


def _join_signed(parts: List[Tuple[int, str]]) -> str:
    if not parts:
        return "0"
    out = ""
    for i, (sign, text) in enumerate(parts):
        if i == 0:
            out = f"-{text}" if sign < 0 else text
        else:
            out += f" - {text}" if sign < 0 else f" + {text}"
    return out


def format_laurent(a: LaurentPolynomial) -> str:
    """
    Canonical text: ``c*x1^a*x2^b`` terms, graded lex descending.
    """
    return _join_signed(
        [(1 if c > 0 else -1, format_term(e1, e2, c)) for e1, e2, c in a.canonical_terms()]
    )


def _split_signed(text: str) -> List[str]:
    chunks = []
    current = ""
    for i, ch in enumerate(text):
        if ch in "+-" and current and text[i - 1] != "^":
            chunks.append(current)
            current = ch
        else:
            current += ch
    if current:
        chunks.append(current)
    return chunks


def parse_laurent(text: str) -> LaurentPolynomial:
    """
    Inverse of ``format_laurent``. Accepts any product order of integer,
    ``x1`` and ``x2`` factors joined by ``*``.
    """
    s = "".join(text.split())
    if not s:
        raise ParseError("Empty polynomial text")
    acc: Dict[Exponent, int] = {}
    for chunk in _split_signed(s):
        sign = 1
        if chunk[0] in "+-":
            sign = -1 if chunk[0] == "-" else 1
            chunk = chunk[1:]
        if not chunk:
            raise ParseError(f"Dangling sign in {text!r}")
        coeff, e1, e2 = 1, 0, 0
        for factor in chunk.split("*"):
            if not factor:
                raise ParseError(f"Empty factor in {text!r}")
            base, _, exp = factor.partition("^")
            try:
                power = int(exp) if exp else 1
                if base == "x1":
                    e1 += power
                elif base == "x2":
                    e2 += power
                elif not exp:
                    coeff *= int(base)
                else:
                    coeff *= int(base) ** power
            except ValueError:
                raise ParseError(f"Bad factor {factor!r} in {text!r}") from None
        acc[(e1, e2)] = acc.get((e1, e2), 0) + sign * coeff
    return LaurentPolynomial(acc)


# JSON form


def to_json_terms(a: LaurentPolynomial) -> list:
    """``[e1, e2, "coeff"]`` triples in canonical order"""
    return [[e1, e2, str(c)] for e1, e2, c in a.canonical_terms()]


def from_json_terms(data) -> LaurentPolynomial:
    if isinstance(data, str):
        data = json.loads(data)
    try:
        return LaurentPolynomial.from_terms((int(e1), int(e2), int(c)) for e1, e2, c in data)
    except (TypeError, ValueError):
        raise ParseError(f"Malformed polynomial JSON: {data!r}") from None


# Numerator / denominator presentation


def _binomial_power(group: Dict[int, int]) -> Tuple[int, int] | None:
    """
    If ``group`` (x2-exponent -> coeff) is (x2^d + 1)^k with k >= 1, return (d, k).
    """
    if len(group) < 2 or group.get(0) != 1:
        return None
    exps = [e for e in group if e]
    if any(e < 0 for e in exps):
        return None
    d = 0
    for e in exps:
        d = math.gcd(d, e)
    top = max(exps)
    k = top // d
    if len(group) != k + 1:
        return None
    for i in range(k + 1):
        if group.get(i * d, 0) != math.comb(k, i):
            return None
    return d, k


@dataclass(frozen=True)
class CanonicalForm:
    """
    A Laurent polynomial presented as polynomial numerator over a monomial.
    """

    numerator: LaurentPolynomial
    """
    Polynomial numerator
    """

    denominator: Monomial
    """
    Monomial denominator
    """

    @staticmethod
    def of(a: LaurentPolynomial) -> "CanonicalForm":
        num, den = split_denominator(a)
        return CanonicalForm(num, den)

    def to_laurent(self) -> LaurentPolynomial:
        return self.numerator.shift(-self.denominator.e1, -self.denominator.e2)

    def numerator_text(self) -> str:
        groups: Dict[int, Dict[int, int]] = {}
        for (e1, e2), c in self.numerator._terms.items():
            groups.setdefault(e1, {})[e2] = c
        parts: List[Tuple[int, str]] = []
        for e1 in sorted(groups):
            group = groups[e1]
            collapsed = _binomial_power(group) if e1 == 0 else None
            if collapsed is not None:
                d, k = collapsed
                inner = f"{_format_factor('x2', d)}+1"
                parts.append((1, f"({inner})" if k == 1 else f"({inner})^{k}"))
                continue
            for e2 in sorted(group):
                c = group[e2]
                parts.append((1 if c > 0 else -1, format_term(e1, e2, c)))
        return _join_signed(parts)

    def __str__(self):
        num = self.numerator_text()
        den = self.denominator
        if den.e1 == 0 and den.e2 == 0:
            return num
        if not (num.startswith("(") and num.endswith(")") and num.count("(") == 1):
            num = f"({num})"
        return f"{num} / ({format_term(den.e1, den.e2, 1)})"

    def to_dict(self) -> dict:
        return {
            "numerator": to_json_terms(self.numerator),
            "denominator": [self.denominator.e1, self.denominator.e2],
        }
