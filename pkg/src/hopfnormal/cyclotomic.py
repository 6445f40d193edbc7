"""Exact arithmetic in the cyclotomic integers ``Z[zeta_m]``.

An element is stored as its integer coefficient vector modulo the
cyclotomic polynomial ``Phi_m``, so equality is plain tuple equality.
"""

from __future__ import annotations

from functools import lru_cache
from math import gcd
from typing import Iterable, Union

from .errors import HypothesisError


def _polydiv_exact(num: list[int], den: list[int]) -> list[int]:
    """Exact division of integer polynomials (coefficients low -> high)."""
    num = list(num)
    dn = len(den) - 1
    lead = den[-1]
    if len(num) - 1 < dn:
        raise ArithmeticError("division is not exact")
    q = [0] * (len(num) - dn)
    for k in range(len(num) - 1, dn - 1, -1):
        c = num[k]
        if c % lead:
            raise ArithmeticError("division is not exact")
        c //= lead
        q[k - dn] = c
        if c:
            for j in range(dn + 1):
                num[k - dn + j] -= c * den[j]
    if any(num):
        raise ArithmeticError("division is not exact")
    return q


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """``Phi_m`` as a coefficient tuple, lowest degree first."""
    if m < 1:
        raise ValueError("m must be positive")
    poly = [-1] + [0] * (m - 1) + [1]  # x^m - 1
    for d in range(1, m):
        if m % d == 0:
            poly = _polydiv_exact(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


@lru_cache(maxsize=None)
def _power_basis(m: int) -> tuple[tuple[int, ...], ...]:
    """Reduced coefficient vectors of ``x^k`` for ``0 <= k < 2m``."""
    phi = cyclotomic_polynomial(m)
    deg = len(phi) - 1
    rows = []
    cur = [0] * deg
    cur[0] = 1
    for _ in range(2 * m):
        rows.append(tuple(cur))
        # multiply by x, then reduce the overflow term using the monic Phi_m
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            for j in range(deg):
                cur[j] -= top * phi[j]
    return tuple(rows)


def degree(m: int) -> int:
    return len(cyclotomic_polynomial(m)) - 1


class CycInt:
    """An element of ``Z[zeta_m]`` in canonical form."""

    __slots__ = ("modulus", "coeffs", "_hash")

    def __init__(self, modulus: int, coeffs: Iterable[int] = ()):
        coeffs = list(coeffs)
        d = degree(modulus)
        if len(coeffs) > d:
            coeffs = list(_reduce(modulus, coeffs))
        else:
            coeffs = coeffs + [0] * (d - len(coeffs))
        self.modulus = modulus
        self.coeffs: tuple[int, ...] = tuple(coeffs)
        self._hash = None

    @classmethod
    def zero(cls, m: int) -> "CycInt":
        return cls(m)

    @classmethod
    def one(cls, m: int) -> "CycInt":
        return cls.root(m, 0)

    @classmethod
    def from_int(cls, m: int, n: int) -> "CycInt":
        return cls(m, [n])

    @classmethod
    def root(cls, m: int, e: int) -> "CycInt":
        """``zeta_m ** e``."""
        obj = cls.__new__(cls)
        obj.modulus = m
        obj.coeffs = _power_basis(m)[e % m]
        obj._hash = None
        return obj

    def _check(self, other: "CycInt") -> None:
        if self.modulus != other.modulus:
            raise HypothesisError(
                f"modulus mismatch: {self.modulus} vs {other.modulus}; lift first")

    def _coerce(self, other: Union["CycInt", int]) -> "CycInt":
        if isinstance(other, int):
            return CycInt.from_int(self.modulus, other)
        self._check(other)
        return other

    def __add__(self, other):
        other = self._coerce(other)
        return CycInt._raw(self.modulus, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycInt._raw(self.modulus, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        return CycInt._raw(self.modulus, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        prod = [0] * (len(a) + len(b))
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return CycInt._raw(self.modulus, _reduce(self.modulus, prod))

    __rmul__ = __mul__

    def times_root(self, e: int) -> "CycInt":
        """``self * zeta_m**e`` without a full product."""
        m = self.modulus
        basis = _power_basis(m)
        out = [0] * len(self.coeffs)
        for i, x in enumerate(self.coeffs):
            if x:
                row = basis[(i + e) % m]
                for j, y in enumerate(row):
                    if y:
                        out[j] += x * y
        return CycInt._raw(m, tuple(out))

    @classmethod
    def _raw(cls, m: int, coeffs: tuple[int, ...]) -> "CycInt":
        obj = cls.__new__(cls)
        obj.modulus = m
        obj.coeffs = coeffs
        obj._hash = None
        return obj

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = CycInt.from_int(self.modulus, other)
        if not isinstance(other, CycInt):
            return NotImplemented
        return self.modulus == other.modulus and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.modulus, self.coeffs))
        return self._hash

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def lift(self, m2: int) -> "CycInt":
        """Image under ``zeta_m -> zeta_m2 ** (m2/m)``."""
        return lift_modulus(self, m2)

    def __repr__(self) -> str:
        return f"CycInt({self.modulus}, {list(self.coeffs)})"

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "1" if k == 0 else (f"z{self.modulus}" if k == 1 else f"z{self.modulus}^{k}")
            if k == 0:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}*{mono}")
        if not terms:
            return "0"
        return " + ".join(terms).replace("+ -", "- ")


def _reduce(m: int, poly) -> tuple[int, ...]:
    basis = _power_basis(m)
    d = degree(m)
    out = [0] * d
    for k, c in enumerate(poly):
        if c:
            if k < d:
                out[k] += c
            else:
                row = basis[k % m] if k >= 2 * m else basis[k]
                for j, y in enumerate(row):
                    if y:
                        out[j] += c * y
    return tuple(out)


def cyc_add(a: CycInt, b: CycInt) -> CycInt:
    a._check(b)
    return a + b


def cyc_mul(a: CycInt, b: CycInt) -> CycInt:
    a._check(b)
    return a * b


def is_zero(a: CycInt) -> bool:
    return a.is_zero()


def lift_modulus(a: CycInt, m2: int) -> CycInt:
    m = a.modulus
    if m2 % m:
        raise HypothesisError(f"{m2} is not a multiple of {m}")
    step = m2 // m
    poly = [0] * (step * (len(a.coeffs) - 1) + 1)
    for k, c in enumerate(a.coeffs):
        poly[k * step] = c
    return CycInt(m2, _reduce(m2, poly))


def lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def format_root(m: int, e: int) -> str:
    return f"z{m}^{e % m}"
