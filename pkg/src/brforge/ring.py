"""Prime fields, exponent-vector monomials, monomial orders, and a seeded RNG.

Everything downstream manipulates dense exponent tuples over a small fixed
variable set, so the primitives here stay deliberately dumb: tuples, ints,
and flat comparison keys that plug straight into heapq.
"""

from __future__ import annotations

from typing import Iterable, Sequence

__all__ = [
    "MAX_N",
    "PrimeField",
    "Rng",
    "Monomial",
    "negkey_exps",
    "sortkey_exps",
    "DegRevLex",
    "DEGREVLEX",
    "TermOverPosition",
    "SchreyerOrder",
    "compare",
]

# Variables are z0..zn; dense exponent tuples stay cheap only while n is small.
MAX_N = 16

_MASK64 = (1 << 64) - 1


def _is_prime(m: int) -> bool:
    if m < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if m % q == 0:
            return m == q
    # Deterministic Miller-Rabin; these witnesses cover everything below 2**31.
    d = m - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11):
        x = pow(a, d, m)
        if x == 1 or x == m - 1:
            continue
        for _ in range(s - 1):
            x = x * x % m
            if x == m - 1:
                break
        else:
            return False
    return True


class PrimeField:
    """Arithmetic mod an odd prime p with 2 < p < 2**31.

    Elements are canonical ints in [0, p).  Printing uses the symmetric
    representative in (-p/2, p/2], which is what `symmetric` returns.
    """

    __slots__ = ("p",)

    def __init__(self, p: int):
        if not isinstance(p, int) or not (2 < p < 2**31):
            raise ValueError(f"characteristic must be an int in (2, 2**31): {p!r}")
        if not _is_prime(p):
            raise ValueError(f"characteristic must be prime: {p}")
        self.p = p

    def normalize(self, c: int) -> int:
        return c % self.p

    def add(self, a: int, b: int) -> int:
        s = a + b
        return s - self.p if s >= self.p else s

    def sub(self, a: int, b: int) -> int:
        d = a - b
        return d + self.p if d < 0 else d

    def mul(self, a: int, b: int) -> int:
        return a * b % self.p

    def neg(self, a: int) -> int:
        return self.p - a if a else 0

    def inv(self, a: int) -> int:
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of 0 in prime field")
        return pow(a, -1, self.p)

    def symmetric(self, c: int) -> int:
        c %= self.p
        return c if c <= self.p // 2 else c - self.p

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("PrimeField", self.p))

    def __repr__(self) -> str:
        return f"PrimeField({self.p})"


class Rng:
    """Deterministic 64-bit stream (splitmix64).

    The exact draw protocol is part of the output contract: identical seeds
    must reproduce identical objects everywhere, so no platform RNG is used.

        next64():  state += 0x9E3779B97F4A7C15
                   z = state
                   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
                   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
                   return z ^ (z >> 31)          (all mod 2**64)
        below(m):  next64() % m
        bit():     next64() & 1
    """

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, m: int) -> int:
        if m <= 0:
            raise ValueError("below() needs a positive bound")
        return self.next64() % m

    def bit(self) -> int:
        return self.next64() & 1


class Monomial:
    """Dense exponent vector with cached total degree."""

    __slots__ = ("exps", "degree")

    def __init__(self, exps: Iterable[int]):
        e = tuple(exps)
        if any(x < 0 for x in e):
            raise ValueError(f"negative exponent in {e}")
        self.exps = e
        self.degree = sum(e)

    def is_one(self) -> bool:
        return self.degree == 0

    def mul(self, other: "Monomial") -> "Monomial":
        return Monomial(a + b for a, b in zip(self.exps, other.exps))

    def divides(self, other: "Monomial") -> bool:
        return all(a <= b for a, b in zip(self.exps, other.exps))

    def quotient(self, other: "Monomial") -> "Monomial":
        """self / other; requires other | self."""
        if not other.divides(self):
            raise ValueError(f"{other} does not divide {self}")
        return Monomial(a - b for a, b in zip(self.exps, other.exps))

    def lcm(self, other: "Monomial") -> "Monomial":
        return Monomial(max(a, b) for a, b in zip(self.exps, other.exps))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Monomial) and other.exps == self.exps

    def __hash__(self) -> int:
        return hash(self.exps)

    def __repr__(self) -> str:
        return f"Monomial{self.exps}"


def negkey_exps(exps: Sequence[int]) -> tuple:
    """Flat key whose MINIMUM is the degrevlex-largest monomial.

    Degrevlex: higher degree wins; on equal degree the monomial with the
    smaller exponent on the last differing variable (scanning from the last
    variable) wins.  Reversing the tuple makes plain lexicographic comparison
    of (-deg, e_n, ..., e_0) do exactly that, which is what heapq wants.
    """
    return (-sum(exps), *reversed(exps))


def sortkey_exps(exps: Sequence[int]) -> tuple:
    """Flat key that sorts ascending in degrevlex (largest monomial = largest key)."""
    return (sum(exps), *(-e for e in reversed(exps)))


class DegRevLex:
    """Degree reverse lexicographic order on ring monomials."""

    kind = "degrevlex"

    @staticmethod
    def compare(a_exps: Sequence[int], b_exps: Sequence[int]) -> int:
        ka = sortkey_exps(a_exps)
        kb = sortkey_exps(b_exps)
        return (ka > kb) - (ka < kb)

    def __repr__(self) -> str:
        return "DegRevLex"


DEGREVLEX = DegRevLex()


class TermOverPosition:
    """Module order: compare monomial parts by degrevlex, break ties by
    component with the LOWER component index winning."""

    kind = "top"

    @staticmethod
    def negkey(comp: int, exps: Sequence[int]) -> tuple:
        return (negkey_exps(exps), comp)

    def __repr__(self) -> str:
        return "TermOverPosition"


class SchreyerOrder:
    """Order induced by a list of ambient leading terms, one per component.

    m*e_j vs m'*e_k compare as m*lead(j) vs m'*lead(k) in the ambient order
    (term over position), with ties broken by the smaller component index.
    """

    kind = "schreyer"
    __slots__ = ("leads",)

    def __init__(self, leads: Sequence[tuple[int, tuple[int, ...]]]):
        # leads[j] = (ambient component, ambient exponent tuple) of column j's lead
        self.leads = tuple(leads)

    def negkey(self, comp: int, exps: Sequence[int]) -> tuple:
        lead_comp, lead_exps = self.leads[comp]
        prod = tuple(a + b for a, b in zip(exps, lead_exps))
        return (negkey_exps(prod), lead_comp, comp)

    def __repr__(self) -> str:
        return f"SchreyerOrder({len(self.leads)} columns)"


def compare(a: Monomial, b: Monomial, order: DegRevLex = DEGREVLEX) -> int:
    """Three-way comparison of two monomials under the given ring order."""
    if len(a.exps) != len(b.exps):
        raise ValueError("monomials live in different variable counts")
    return order.compare(a.exps, b.exps)
