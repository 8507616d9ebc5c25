"""Coefficient-field arithmetic for F_q = F_p[y]/(m(y)).

Elements are integers in [0, q) encoding the F_p coordinate vector in base p
(low coordinate in the low digit).  Prime fields (k = 1) use direct modular
arithmetic; proper extensions precompute q x q multiplication tables, which
caps them at q <= 512 — ample for desk scale.
"""

from __future__ import annotations

import functools

from .errors import ConsistencyError, ResourceLimitError
from .numtheory import is_prime, is_prime_power

_TABLE_CAP = 512


def _fp_trim(f):
    while f and f[-1] == 0:
        f.pop()
    return f


def _fp_mul(p, a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _fp_trim(out)


def _fp_divmod(p, a, b):
    a = list(a)
    db = len(b) - 1
    inv_lead = pow(b[-1], p - 2, p)
    quot = [0] * max(0, len(a) - db)
    while len(a) - 1 >= db and a:
        shift = len(a) - 1 - db
        c = a[-1] * inv_lead % p
        quot[shift] = c
        for i, bi in enumerate(b):
            a[shift + i] = (a[shift + i] - c * bi) % p
        _fp_trim(a)
    return _fp_trim(quot), a


def _fp_monic_polys(p, d):
    """Monic degree-d polynomials over F_p, low coefficients cycling fastest."""
    for enc in range(p**d):
        coeffs = []
        e = enc
        for _ in range(d):
            coeffs.append(e % p)
            e //= p
        coeffs.append(1)
        yield coeffs


def _fp_is_irreducible(p, f):
    d = len(f) - 1
    if d <= 0:
        return False
    if d == 1:
        return True
    for dd in range(1, d // 2 + 1):
        for g in _fp_monic_polys(p, dd):
            if not _fp_divmod(p, f, g)[1]:
                return False
    return True


class SmallField:
    """Arithmetic in F_q with integer-encoded elements.

    The constant elements 0..p-1 are the prime subfield F_p.
    """

    def __init__(self, p: int, k: int, modulus: tuple[int, ...] | None = None):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if k < 1:
            raise ValueError(f"extension degree must be >= 1, got {k}")
        self.p = p
        self.k = k
        self.q = p**k
        if modulus is None:
            modulus = self._canonical_modulus(p, k)
        else:
            modulus = tuple(c % p for c in modulus)
            if len(modulus) != k + 1 or modulus[-1] != 1:
                raise ValueError(f"base modulus must be monic of degree {k}")
            if not _fp_is_irreducible(p, list(modulus)):
                raise ValueError(f"base modulus {modulus} is reducible over F_{p}")
        self.modulus = modulus
        self._mul_table = None
        self._inv_table = None
        if k > 1 and self.q > _TABLE_CAP:
            raise ResourceLimitError(
                f"F_{self.q} coefficient field exceeds the table cap {_TABLE_CAP}"
            )

    @staticmethod
    def _canonical_modulus(p, k):
        # Lexicographically smallest monic irreducible, coefficients compared
        # low-to-high as integers; for k = 1 this is the polynomial y itself.
        for f in _fp_monic_polys(p, k):
            if _fp_is_irreducible(p, f):
                return tuple(f)
        raise ConsistencyError(f"no irreducible of degree {k} over F_{p}")

    def __repr__(self):
        return f"SmallField(p={self.p}, k={self.k})"

    def digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.k):
            out.append(a % self.p)
            a //= self.p
        return out

    def from_digits(self, ds) -> int:
        val = 0
        for d in reversed(list(ds)):
            val = val * self.p + d % self.p
        return val

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self.k == 1:
            return (a + b) % self.p
        p = self.p
        val, mult = 0, 1
        for _ in range(self.k):
            val += ((a + b) % p) * mult
            a //= p
            b //= p
            mult *= p
        return val

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        if self.k == 1:
            return (-a) % self.p
        p = self.p
        val, mult = 0, 1
        for _ in range(self.k):
            val += ((-a) % p) * mult
            a //= p
            mult *= p
        return val

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def _ensure_tables(self):
        if self._mul_table is not None:
            return
        q, p = self.q, self.p
        mod = list(self.modulus)
        table = [0] * (q * q)
        for a in range(q):
            pa = _fp_trim(self.digits(a))
            for b in range(a, q):
                pb = _fp_trim(self.digits(b))
                prod = _fp_mul(p, pa, pb)
                _, rem = _fp_divmod(p, prod, mod) if len(prod) > self.k else ([], prod)
                v = self.from_digits(rem + [0] * (self.k - len(rem)))
                table[a * q + b] = v
                table[b * q + a] = v
        inv = [0] * q
        for a in range(1, q):
            row = table[a * q : a * q + q]
            inv[a] = row.index(1)
        self._mul_table = table
        self._inv_table = inv

    def mul(self, a: int, b: int) -> int:
        if self.k == 1:
            return a * b % self.p
        self._ensure_tables()
        return self._mul_table[a * self.q + b]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        if self.k == 1:
            return pow(a, self.p - 2, self.p)
        self._ensure_tables()
        return self._inv_table[a]

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        result = 1
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result


@functools.lru_cache(maxsize=None)
def canonical_field(q: int) -> SmallField:
    """F_q with the canonical (lexicographically smallest) modulus."""
    p, k = is_prime_power(q)
    return SmallField(p, k)
