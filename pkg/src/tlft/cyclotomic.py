"""Exact arithmetic in the cyclotomic field Q(zeta_N).

Elements are coefficient vectors in the power basis 1, z, ..., z^(d-1),
d = phi(N), always reduced modulo the N-th cyclotomic polynomial, so equal
field elements have equal coefficients.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple:
    """Integer coefficients of Phi_n, lowest degree first."""
    # x^n - 1 = prod_{d | n} Phi_d(x)
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            num = _exact_divide(num, list(cyclotomic_polynomial(d)))
    return tuple(num)


def _exact_divide(num, den):
    num = list(num)
    q = [0] * (len(num) - len(den) + 1)
    for i in range(len(q) - 1, -1, -1):
        c = num[i + len(den) - 1] // den[-1]
        q[i] = c
        for j, b in enumerate(den):
            num[i + j] -= c * b
    assert not any(num), "inexact polynomial division"
    return q


@lru_cache(maxsize=None)
def _power_table(n: int) -> tuple:
    """Row e: coefficients of z^e (0 <= e < n) in the power basis."""
    phi = cyclotomic_polynomial(n)
    d = len(phi) - 1
    rows = []
    cur = [1] + [0] * (d - 1)
    for _ in range(n):
        rows.append(tuple(cur))
        # multiply by z and reduce with the monic Phi_n
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            cur = [c - top * p for c, p in zip(cur, phi[:-1])]
    return tuple(rows)


def degree(n: int) -> int:
    return len(cyclotomic_polynomial(n)) - 1


class CycScalar:
    __slots__ = ("N", "coeffs")

    def __init__(self, N: int, coeffs):
        if N < 1:
            raise ValueError("root order must be positive")
        d = degree(N)
        cs = [Fraction(c) for c in coeffs]
        if len(cs) > d:
            cs = _reduce(N, cs)
        cs += [Fraction(0)] * (d - len(cs))
        self.N = N
        self.coeffs = tuple(cs)

    @classmethod
    def rational(cls, N: int, q) -> "CycScalar":
        return cls(N, [Fraction(q)])

    @classmethod
    def from_exponent_counts(cls, N: int, counts) -> "CycScalar":
        """sum_e counts[e] * z^e for e in 0..N-1."""
        table = _power_table(N)
        d = degree(N)
        out = [0] * d
        for e, c in enumerate(counts):
            if c:
                for i, t in enumerate(table[e % N]):
                    if t:
                        out[i] += c * t
        return cls(N, out)

    def _check(self, other):
        if isinstance(other, CycScalar):
            if other.N != self.N:
                raise ValueError(f"mixed root orders {self.N} and {other.N}")
            return other
        if isinstance(other, (int, Fraction)):
            return CycScalar.rational(self.N, other)
        return NotImplemented

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return CycScalar(self.N, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CycScalar(self.N, [-a for a in self.coeffs])

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        prod = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return CycScalar(self.N, _reduce(self.N, prod))

    __rmul__ = __mul__

    def scale(self, q) -> "CycScalar":
        q = Fraction(q)
        return CycScalar(self.N, [q * c for c in self.coeffs])

    def inverse(self) -> "CycScalar":
        # solve (x * y) = 1 for the coordinates of y
        d = len(self.coeffs)
        if not any(self.coeffs):
            raise ZeroDivisionError("inverse of zero")
        cols = []
        basis = CycScalar(self.N, [1])
        z = CycScalar(self.N, [0, 1]) if d > 1 else basis
        for _ in range(d):
            cols.append((self * basis).coeffs)
            basis = basis * z
        # solve sum_j y_j cols[j] = e_0
        m = [[cols[j][i] for j in range(d)] + [Fraction(int(i == 0))] for i in range(d)]
        for c in range(d):
            p = next(r for r in range(c, d) if m[r][c] != 0)
            m[c], m[p] = m[p], m[c]
            pv = m[c][c]
            m[c] = [x / pv for x in m[c]]
            for r in range(d):
                if r != c and m[r][c] != 0:
                    f = m[r][c]
                    m[r] = [x - f * y for x, y in zip(m[r], m[c])]
        return CycScalar(self.N, [m[i][d] for i in range(d)])

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(Fraction(1) / Fraction(other))
        other = self._check(other)
        return self * other.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = CycScalar(self.N, [1])
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CycScalar.rational(self.N, other)
        if not isinstance(other, CycScalar):
            return NotImplemented
        return self.N == other.N and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.N, self.coeffs))

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def to_complex(self) -> complex:
        import cmath
        z = cmath.exp(2j * cmath.pi / self.N)
        return sum(float(c) * z ** i for i, c in enumerate(self.coeffs))

    def to_json(self) -> dict:
        return {"N": self.N, "coeffs": [f"{c.numerator}/{c.denominator}" for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj) -> "CycScalar":
        return cls(int(obj["N"]), [Fraction(c) for c in obj["coeffs"]])

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(str(c) if i == 0 else f"{c}*z^{i}")
        return f"CycScalar(N={self.N}: {' + '.join(terms) or '0'})"


def _reduce(N: int, coeffs) -> list:
    phi = cyclotomic_polynomial(N)
    d = len(phi) - 1
    cs = list(coeffs)
    for i in range(len(cs) - 1, d - 1, -1):
        c = cs[i]
        if c:
            cs[i] = 0
            for j in range(d):
                cs[i - d + j] -= c * phi[j]
    return cs[:d] + [Fraction(0)] * (d - min(d, len(cs)))


def root(N: int, e: int) -> CycScalar:
    """zeta_N ** e."""
    return CycScalar(N, _power_table(N)[e % N])
