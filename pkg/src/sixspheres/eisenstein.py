"""Eisenstein integers ``k + l*j`` with ``j = exp(i*pi/3)``.

Note the generator is the primitive 6th root of unity, so ``j**2 = j - 1``
(the common convention ``omega = exp(2i*pi/3)`` equals ``j**2`` here).
"""

from __future__ import annotations

import cmath
import math
from typing import NamedTuple, Tuple


class ZeroInput(ValueError):
    pass


class EisensteinInt(NamedTuple):
    k: int
    l: int

    def __mul__(self, other: "EisensteinInt") -> "EisensteinInt":  # type: ignore[override]
        return mul(self, other)

    def __add__(self, other: "EisensteinInt") -> "EisensteinInt":  # type: ignore[override]
        return EisensteinInt(self.k + other.k, self.l + other.l)

    def __sub__(self, other: "EisensteinInt") -> "EisensteinInt":
        return EisensteinInt(self.k - other.k, self.l - other.l)

    def __neg__(self) -> "EisensteinInt":
        return EisensteinInt(-self.k, -self.l)

    @property
    def norm(self) -> int:
        return norm(self)

    def conj(self) -> "EisensteinInt":
        # conj(j) = 1 - j
        return EisensteinInt(self.k + self.l, -self.l)

    def to_complex(self) -> complex:
        return self.k + self.l * cmath.exp(1j * math.pi / 3)


ONE = EisensteinInt(1, 0)
J = EisensteinInt(0, 1)
ONE_PLUS_J = EisensteinInt(1, 1)


def mul(a: Tuple[int, int], b: Tuple[int, int]) -> EisensteinInt:
    k1, l1 = a
    k2, l2 = b
    return EisensteinInt(k1 * k2 - l1 * l2, k1 * l2 + l1 * k2 + l1 * l2)


def norm(z: Tuple[int, int]) -> int:
    k, l = z
    return k * k + k * l + l * l


def j_power(u: int) -> EisensteinInt:
    z = ONE
    for _ in range(u % 6):
        z = mul(z, J)
    return z


def lattice_class(z: Tuple[int, int]) -> str:
    """'A' if divisible by 1+j, 'B' if congruent to 1, 'Bj' if to j."""
    k, l = z
    if k == 0 and l == 0:
        raise ZeroInput("lattice class of 0 is undefined")
    return ("A", "B", "Bj")[(k - l) % 3]


def divide_exact(a: Tuple[int, int], b: Tuple[int, int]) -> EisensteinInt:
    """``a / b``; raises ValueError when the quotient is not integral."""
    n = norm(b)
    if n == 0:
        raise ZeroInput("division by zero")
    num = mul(a, EisensteinInt(*b).conj())
    if num.k % n or num.l % n:
        raise ValueError(f"{tuple(a)} is not divisible by {tuple(b)}")
    return EisensteinInt(num.k // n, num.l // n)


def canonical_rotation(z: Tuple[int, int]) -> EisensteinInt:
    """Representative of ``{z, z j^2, z j^4}`` with argument in [0, 120) degrees.

    Inside the sector k > 0, l >= 0 this is the point with k > 0, l >= 0.
    """
    z = EisensteinInt(*z)
    if z == (0, 0):
        raise ZeroInput("zero has no canonical rotation")
    j2 = j_power(2)
    for _ in range(3):
        k, l = z
        if (l > 0 and k + l > 0) or (l == 0 and k > 0):
            return z
        z = mul(z, j2)
    raise AssertionError("unreachable")


def factor(z: Tuple[int, int]) -> Tuple[int, int, EisensteinInt]:
    """Write ``z = (1+j)^s * z' * j^u`` up to a factor ``j^(2m)``.

    Returns ``(s, u, z')`` with ``s`` maximal, ``u`` in {0, 1} and ``z'`` of
    class B, normalized by :func:`canonical_rotation`.
    """
    z = EisensteinInt(*z)
    if z == (0, 0):
        raise ZeroInput("cannot factor 0")
    s = 0
    while lattice_class(z) == "A":
        z = divide_exact(z, ONE_PLUS_J)
        s += 1
    u = 0
    if lattice_class(z) == "Bj":
        z = divide_exact(z, J)
        u = 1
    return s, u, canonical_rotation(z)


def rebuild(s: int, u: int, zp: Tuple[int, int]) -> EisensteinInt:
    z = EisensteinInt(*zp)
    for _ in range(s):
        z = mul(z, ONE_PLUS_J)
    return mul(z, j_power(u))


def same_up_to_j2(a: Tuple[int, int], b: Tuple[int, int]) -> bool:
    return canonical_rotation(a) == canonical_rotation(b)


def representations(n: int) -> list:
    """All (k, l) with 0 <= l <= k and k^2 + kl + l^2 == n."""
    out = []
    k = 0
    while k * k <= n:
        for l in range(0, k + 1):
            v = k * k + k * l + l * l
            if v == n:
                out.append((k, l))
            if v > n:
                break
        k += 1
    return out


def parameters_up_to(bound: int, include_boundary_mirror: bool = False) -> list:
    """Parameters (k, l), 0 <= l <= k, (k, l) != (0, 0), with norm <= bound."""
    out = []
    for n in range(1, bound + 1):
        out.extend(representations(n))
    if include_boundary_mirror:
        out += [(l, k) for k, l in out if l != k and l != 0]
    return out
