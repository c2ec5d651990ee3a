"""Exact coefficient fields: the rationals and prime fields of odd characteristic.

Coefficients are stored as raw payloads (Fraction, or int reduced mod p) and
manipulated through a Field object, so linear-combination code never touches
floating point.
"""

from fractions import Fraction


class Field:
    """Common interface for the exact coefficient fields."""

    def __call__(self, n):
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def is_zero(self, a):
        raise NotImplementedError


class Rationals(Field):
    """The field of rational numbers, payloads are Fraction."""

    name = "Q"

    def __call__(self, n):
        return Fraction(n)

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return 1 / a

    def is_zero(self, a):
        return a == 0

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "QQ"

    def format(self, a):
        return str(a)


class PrimeField(Field):
    """The field F_p for an odd prime p, payloads are ints in [0, p)."""

    def __init__(self, p):
        if p < 3 or any(p % q == 0 for q in range(2, int(p**0.5) + 1)):
            raise ValueError(f"not an odd prime: {p}")
        self.p = p
        self.name = f"F{p}"

    def __call__(self, n):
        if isinstance(n, Fraction):
            num = n.numerator % self.p
            den = n.denominator % self.p
            return num * pow(den, -1, self.p) % self.p
        return n % self.p

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of 0")
        return pow(a, -1, self.p)

    def is_zero(self, a):
        return a % self.p == 0

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("F", self.p))

    def __repr__(self):
        return f"GF({self.p})"

    def format(self, a):
        return str(a % self.p)


QQ = Rationals()


def parse_field(text):
    """Parse a field spec: 'q' for the rationals, 'fp:<p>' for F_p."""
    text = text.strip().lower()
    if text in ("q", "qq", "rational", "rationals"):
        return QQ
    if text.startswith("fp:"):
        try:
            p = int(text[3:])
        except ValueError:
            raise ValueError(f"bad prime in field spec {text!r}")
        return PrimeField(p)
    raise ValueError(f"unknown field spec {text!r} (expected 'q' or 'fp:<p>')")
