"""Integer bracket arithmetic for rooted graphs.

A bracket ``<a-b, a, b>`` stores I(G;-1) next to the two operands of the
vertex-deletion recursion at the root: ``a = I(G-v;-1)`` and
``b = I(G-N[v];-1)``.  Nothing here knows about graphs.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Bracket:
    value: int
    a: int
    b: int

    def __post_init__(self) -> None:
        if self.value != self.a - self.b:
            raise ValueError(f"bracket value {self.value} != {self.a} - {self.b}")

    @classmethod
    def of(cls, a: int, b: int) -> Bracket:
        return cls(a - b, a, b)

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.value, self.a, self.b)

    def __neg__(self) -> Bracket:
        return negate_bracket(self)

    def __str__(self) -> str:
        return f"<{self.value},{self.a},{self.b}>"


K1_BRACKET = Bracket(0, 1, 1)
K2_BRACKET = Bracket(-1, 0, 1)
C6_BRACKET = Bracket(2, 1, -1)


def paste_brackets(left: Bracket, right: Bracket) -> Bracket:
    """Bracket of two rooted graphs glued at their roots.

    Valid when both graphs have at least two vertices; the arithmetic
    itself is total.
    """
    return Bracket.of(left.a * right.a, left.b * right.b)


def _extend_once(B: Bracket) -> Bracket:
    return Bracket(-B.b, B.value, B.a)


def extend_bracket(B: Bracket, ell: int) -> Bracket:
    """Bracket after hanging a path of ``ell`` edges at the root (period 6)."""
    if ell < 0:
        raise ValueError("extension length must be non-negative")
    for _ in range(ell % 6):
        B = _extend_once(B)
    return B


def negate_bracket(B: Bracket) -> Bracket:
    return Bracket(-B.value, -B.a, -B.b)
