"""Exact scalars: rational numbers and odd prime fields, chosen at runtime.

Rational arithmetic is plain ``fractions.Fraction`` (already canonical:
reduced, positive denominator).  Prime-field elements are ``Fp`` wrappers
around a residue; they interoperate with ``int`` and ``Fraction`` literals
so that parsed input like ``1/2`` means ``inverse(2)`` mod p.

Everything downstream (polynomials, forms, invariants) is generic over a
field object exposing ``of``, ``zero``, ``one``, ``characteristic``,
``nth_root`` and ``roots_of_unity``.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import FieldMismatchError, UnsupportedOrderError


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for small in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % small == 0:
            return n == small
    # deterministic Miller-Rabin for n < 3.3e24
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def integer_nth_root(a: int, n: int):
    """Exact n-th root of a nonnegative integer, or None."""
    if a < 0:
        raise ValueError("negative radicand")
    if a in (0, 1) or n == 1:
        return a
    hi = 1 << (a.bit_length() // n + 2)
    lo = 0
    while lo < hi:
        mid = (lo + hi) // 2
        if mid**n < a:
            lo = mid + 1
        else:
            hi = mid
    return lo if lo**n == a else None


class Fp:
    """Element of F_p, stored as the canonical residue in [0, p)."""

    __slots__ = ("residue", "p")

    def __init__(self, residue: int, p: int):
        self.residue = residue % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, Fp):
            if other.p != self.p:
                raise FieldMismatchError(f"F_{self.p} vs F_{other.p}")
            return other
        if isinstance(other, int):
            return Fp(other, self.p)
        if isinstance(other, Fraction):
            return Fp(other.numerator, self.p) / Fp(other.denominator, self.p)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Fp(self.residue + other.residue, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Fp(self.residue - other.residue, self.p)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Fp(other.residue - self.residue, self.p)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Fp(self.residue * other.residue, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.residue == 0:
            raise ZeroDivisionError(f"division by zero in F_{self.p}")
        return Fp(self.residue * pow(other.residue, self.p - 2, self.p), self.p)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __pow__(self, exponent: int):
        if exponent < 0:
            if self.residue == 0:
                raise ZeroDivisionError(f"division by zero in F_{self.p}")
            return Fp(pow(self.residue, -exponent * (self.p - 2), self.p), self.p)
        return Fp(pow(self.residue, exponent, self.p), self.p)

    def __neg__(self):
        return Fp(-self.residue, self.p)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self._coerce(other)
        if not isinstance(other, Fp):
            return NotImplemented
        if other.p != self.p:
            raise FieldMismatchError(f"F_{self.p} vs F_{other.p}")
        return self.residue == other.residue

    def __hash__(self):
        return hash((self.residue, self.p))

    def __bool__(self):
        return self.residue != 0

    def __repr__(self):
        return f"Fp({self.residue}, {self.p})"

    def __str__(self):
        return str(self.residue)


class Rationals:
    """The field Q.  Elements are fractions.Fraction values."""

    kind = "rationals"

    def characteristic(self) -> int:
        return 0

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    def of(self, value) -> Fraction:
        if isinstance(value, Fp):
            raise FieldMismatchError("cannot coerce a prime-field element into Q")
        return Fraction(value)

    def is_element(self, value) -> bool:
        return isinstance(value, (int, Fraction)) and not isinstance(value, bool)

    def from_str(self, text: str) -> Fraction:
        return Fraction(text)

    def to_str(self, value) -> str:
        return str(Fraction(value))

    def nth_root(self, a, n: int):
        """Canonical exact n-th root in Q, or None.

        Even n and a > 0: the positive root.  Odd n: the real root.
        """
        if n < 1:
            raise ValueError("n must be >= 1")
        a = Fraction(a)
        if n == 1:
            return a
        if a < 0:
            if n % 2 == 0:
                return None
            r = self.nth_root(-a, n)
            return None if r is None else -r
        rn = integer_nth_root(a.numerator, n)
        rd = integer_nth_root(a.denominator, n)
        if rn is None or rd is None:
            return None
        return Fraction(rn, rd)

    def roots_of_unity(self, order: int):
        if order == 1:
            return [Fraction(1)]
        if order == 2:
            return [Fraction(1), Fraction(-1)]
        raise UnsupportedOrderError(f"Q has no primitive {order}-th roots of unity")

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("rationals")

    def __repr__(self):
        return "QQ"


class PrimeField:
    """The field F_p for an odd prime p."""

    kind = "prime"

    def __init__(self, p: int):
        if p < 3 or p % 2 == 0 or not _is_prime(p):
            raise ValueError(f"modulus must be an odd prime, got {p}")
        self.p = p

    def characteristic(self) -> int:
        return self.p

    @property
    def zero(self) -> Fp:
        return Fp(0, self.p)

    @property
    def one(self) -> Fp:
        return Fp(1, self.p)

    def of(self, value) -> Fp:
        if isinstance(value, Fp):
            if value.p != self.p:
                raise FieldMismatchError(f"F_{self.p} vs F_{value.p}")
            return value
        if isinstance(value, Fraction):
            return Fp(1, self.p)._coerce(value)
        if isinstance(value, int):
            return Fp(value, self.p)
        raise FieldMismatchError(f"cannot coerce {value!r} into F_{self.p}")

    def is_element(self, value) -> bool:
        return isinstance(value, Fp) and value.p == self.p

    def from_str(self, text: str) -> Fp:
        return self.of(Fraction(text))

    def to_str(self, value) -> str:
        return str(self.of(value).residue)

    def nth_root(self, a, n: int):
        """Smallest residue r with r^n = a, or None.  Exhaustive; p is small."""
        if n < 1:
            raise ValueError("n must be >= 1")
        a = self.of(a)
        for r in range(self.p):
            if pow(r, n, self.p) == a.residue:
                return Fp(r, self.p)
        return None

    def roots_of_unity(self, order: int):
        """All solutions of x^order = 1, sorted by residue; exactly `order` many."""
        if order < 1:
            raise ValueError("order must be >= 1")
        if (self.p - 1) % order != 0:
            raise UnsupportedOrderError(
                f"F_{self.p} has no elements of order {order} ({order} does not divide p-1)"
            )
        g = self._generator()
        step = pow(g, (self.p - 1) // order, self.p)
        roots = set()
        cur = 1
        for _ in range(order):
            roots.add(cur)
            cur = cur * step % self.p
        return [Fp(r, self.p) for r in sorted(roots)]

    def _generator(self) -> int:
        p = self.p
        factors = []
        m = p - 1
        d = 2
        while d * d <= m:
            if m % d == 0:
                factors.append(d)
                while m % d == 0:
                    m //= d
            d += 1
        if m > 1:
            factors.append(m)
        for g in range(2, p):
            if all(pow(g, (p - 1) // f, p) != 1 for f in factors):
                return g
        raise RuntimeError("no generator found")  # unreachable for prime p

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("prime", self.p))

    def __repr__(self):
        return f"GF({self.p})"


QQ = Rationals()


def GF(p: int) -> PrimeField:
    return PrimeField(p)


def field_from_str(text: str):
    """Parse the CLI field flag: 'q' or 'fp:<p>'."""
    text = text.strip().lower()
    if text in ("q", "qq", "rationals"):
        return QQ
    if text.startswith("fp:"):
        return PrimeField(int(text[3:]))
    raise ValueError(f"unknown field spec {text!r}; use 'q' or 'fp:<p>'")
