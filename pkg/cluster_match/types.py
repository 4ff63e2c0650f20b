from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator, List, Tuple


class ClusterError(Exception):
    """Base exception class for cluster_match errors"""

    pass


class NotDivisible(ClusterError):
    """Exact division left a nonzero remainder"""

    pass


class NonUnitAtNegativeExponent(ClusterError):
    """Evaluation of a negative power at a value that is not a unit"""

    pass


class IndexOutOfFamily(ClusterError):
    """Index outside the domain of a graph family or closed form"""

    pass


class UnknownFormat(ClusterError):
    pass


class ParseError(ClusterError):
    pass


class LimitExceeded(ClusterError):
    """Exhaustive enumeration produced more results than allowed"""

    pass


class VertexLimitExceeded(ClusterError):
    """Graph is wider than the matching engine's configured bitset"""

    pass


class GroundSetTooLarge(ClusterError):
    pass


class UnsupportedCase(ClusterError):
    pass


class UnknownIdentity(ClusterError):
    pass


class CaseParams(tuple):
    """
    The pair (b, c) of positive exchange exponents.

    ``b`` is used at odd indices and ``c`` at even indices.

    Examples:
        CaseParams(1, 4)          # -> (1, 4)
        CaseParams.parse("2,2")   # -> CaseParams(2, 2)
        CaseParams(1, 4).dual()   # -> CaseParams(4, 1)
    """

    def __new__(cls, b: int, c: int) -> "CaseParams":
        if not isinstance(b, int) or not isinstance(c, int) or b < 1 or c < 1:
            raise UnsupportedCase(f"Exponents must be positive integers, got ({b}, {c})")
        return tuple.__new__(cls, (b, c))

    def __repr__(self):
        return f"CaseParams({self.b}, {self.c})"

    def __str__(self):
        return f"({self.b},{self.c})"

    @property
    def b(self) -> int:
        """Exponent applied at odd indices"""
        return self[0]

    @property
    def c(self) -> int:
        """Exponent applied at even indices"""
        return self[1]

    def exponent_at(self, n: int) -> int:
        return self.b if n % 2 else self.c

    def dual(self) -> "CaseParams":
        """The reciprocal case (c, b)"""
        return CaseParams(self.c, self.b)

    @property
    def is_affine(self) -> bool:
        return self.b * self.c == 4

    @staticmethod
    def parse(s: str) -> "CaseParams":
        """
        Parse "b,c" (parentheses optional) into a CaseParams.
        """
        parts = s.strip().strip("()").split(",")
        if len(parts) != 2:
            raise ParseError(f"Expected 'b,c', got {s!r}")
        try:
            return CaseParams(int(parts[0]), int(parts[1]))
        except ValueError:
            raise ParseError(f"Expected integer exponents, got {s!r}") from None


@dataclass(frozen=True)
class Interval:
    """
    Closed integer interval [lo, hi]; empty when lo > hi.
    """

    lo: int
    hi: int

    def __iter__(self) -> Iterator[int]:
        return iter(range(self.lo, self.hi + 1))

    def __contains__(self, n: object) -> bool:
        return isinstance(n, int) and self.lo <= n <= self.hi

    def __len__(self) -> int:
        return max(0, self.hi - self.lo + 1)

    def __str__(self):
        return f"[{self.lo}, {self.hi}]"

    def as_list(self) -> list:
        return [self.lo, self.hi]


class IdentityId(str, Enum):
    """
    Every exact identity the verifier knows how to check
    """

    MAIN_22 = "MAIN_22"
    P_RECUR_22 = "P_RECUR_22"
    LINEAR_22 = "LINEAR_22"
    ODD_Q_22 = "ODD_Q_22"
    DISJOINT_22 = "DISJOINT_22"
    MAIN_14 = "MAIN_14"
    MAIN_41 = "MAIN_41"
    STEP1_14 = "STEP1_14"
    STEP2_14 = "STEP2_14"
    TILDE_LINEAR = "TILDE_LINEAR"
    MIXED = "MIXED"
    TILDES = "TILDES"
    KEYSTEP = "KEYSTEP"
    PROD_DIFF = "PROD_DIFF"
    THREE_TERM = "THREE_TERM"
    SEMI_14 = "SEMI_14"
    RECIPROCITY = "RECIPROCITY"
    SHAPE_RECIPROCITY = "SHAPE_RECIPROCITY"
    POSITIVITY = "POSITIVITY"
    PERIODICITY = "PERIODICITY"

    @staticmethod
    def parse(name: str) -> "IdentityId":
        try:
            return IdentityId(name.strip().upper())
        except ValueError:
            raise UnknownIdentity(f"Unknown identity: {name}") from None


@dataclass
class VerificationReport:
    """
    Outcome of checking one identity over an index range
    """

    identity: IdentityId
    """
    Identity that was checked
    """

    range: Interval
    """
    Requested index range
    """

    failures: List[Tuple[int, object, object]] = field(default_factory=list)
    """
    (n, left side, right side) for every index where the sides differ
    """

    checked: int = 0
    """
    Number of indices actually evaluated
    """

    note: str = ""

    @property
    def passed(self) -> bool:
        return not self.failures

    def record(self, n: int, lhs, rhs):
        """Count index ``n`` and keep it as a failure when the sides differ"""
        self.checked += 1
        if lhs != rhs:
            self.failures.append((n, lhs, rhs))

    def to_dict(self) -> dict:
        return {
            "identity": self.identity.value,
            "range": self.range.as_list(),
            "passed": self.passed,
            "checked": self.checked,
            "failures": [
                {"n": n, "lhs": str(lhs), "rhs": str(rhs)} for n, lhs, rhs in self.failures
            ],
            "note": self.note,
        }
