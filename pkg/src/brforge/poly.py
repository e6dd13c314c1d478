"""Graded polynomials over GF(p) in variables z0..zn under degrevlex.

A Polynomial stores its terms as a tuple of (Monomial, coeff) pairs sorted
descending in the ring order, coefficients canonical in [1, p).  Instances
are immutable; all arithmetic returns fresh objects.  Construction goes
through a PolyRing, which also owns parsing, printing, and random draws.
"""

from __future__ import annotations

import re
from functools import reduce
from typing import Iterable, Mapping, Sequence

from .ring import MAX_N, Monomial, PrimeField, Rng, negkey_exps

__all__ = ["PolyRing", "Polynomial", "FreeModuleElement"]

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|z(?P<var>\d+)|(?P<op>[\^*+-]))")


class PolyRing:
    """Coefficient field GF(p) and variables z0..zn, degrevlex order only."""

    __slots__ = ("field", "n", "nvars", "_mon_cache", "zero", "one", "_vars")

    def __init__(self, p: int, n: int):
        if not (0 <= n <= MAX_N):
            raise ValueError(f"variable index bound n must be in [0, {MAX_N}]: {n}")
        self.field = PrimeField(p)
        self.n = n
        self.nvars = n + 1
        self._mon_cache: dict[int, tuple[tuple[int, ...], ...]] = {}
        self.zero = Polynomial(self, ())
        self.one = self.term(Monomial((0,) * self.nvars), 1)
        self._vars = tuple(
            self.term(Monomial(tuple(1 if j == i else 0 for j in range(self.nvars))), 1)
            for i in range(self.nvars)
        )

    @property
    def p(self) -> int:
        return self.field.p

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PolyRing) and other.p == self.p and other.n == self.n

    def __hash__(self) -> int:
        return hash(("PolyRing", self.p, self.n))

    def __repr__(self) -> str:
        return f"PolyRing(p={self.p}, n={self.n})"

    def variable(self, i: int) -> "Polynomial":
        return self._vars[i]

    def variables(self) -> tuple["Polynomial", ...]:
        return self._vars

    def constant(self, c: int) -> "Polynomial":
        c = self.field.normalize(c)
        if c == 0:
            return self.zero
        return self.term(Monomial((0,) * self.nvars), c)

    def term(self, m: Monomial, c: int) -> "Polynomial":
        c = self.field.normalize(c)
        if c == 0:
            return self.zero
        if len(m.exps) != self.nvars:
            raise ValueError("monomial has the wrong number of variables")
        return Polynomial(self, ((m, c),))

    def from_dict(self, d: Mapping[tuple[int, ...], int]) -> "Polynomial":
        """Build a polynomial from {exponent tuple: coefficient}."""
        terms = []
        for exps, c in d.items():
            c %= self.p
            if c:
                terms.append((Monomial(exps), c))
        terms.sort(key=lambda t: negkey_exps(t[0].exps))
        return Polynomial(self, tuple(terms))

    def exponents_of_degree(self, d: int) -> tuple[tuple[int, ...], ...]:
        """All exponent tuples of total degree d, descending in the ring order."""
        if d < 0:
            return ()
        cached = self._mon_cache.get(d)
        if cached is None:
            out: list[tuple[int, ...]] = []

            def rec(prefix: list[int], remaining: int, pos: int) -> None:
                if pos == self.nvars - 1:
                    out.append(tuple(prefix + [remaining]))
                    return
                for e in range(remaining, -1, -1):
                    rec(prefix + [e], remaining - e, pos + 1)

            rec([], d, 0)
            out.sort(key=negkey_exps)
            cached = tuple(out)
            self._mon_cache[d] = cached
        return cached

    def random_form(self, d: int, rng: Rng) -> "Polynomial":
        """Form of degree d with an independent uniform coefficient (0 allowed)
        drawn for every monomial, in descending ring order."""
        acc: dict[tuple[int, ...], int] = {}
        for exps in self.exponents_of_degree(d):
            c = rng.below(self.p)
            if c:
                acc[exps] = c
        return self.from_dict(acc)

    def sparse_form(self, d: int, rng: Rng) -> "Polynomial":
        """Form of degree d where each monomial, taken in descending ring
        order, is kept with probability 1/2 (one bit drawn) and, if kept,
        receives a uniform nonzero coefficient (one draw below p-1)."""
        acc: dict[tuple[int, ...], int] = {}
        for exps in self.exponents_of_degree(d):
            if rng.bit():
                acc[exps] = 1 + rng.below(self.p - 1)
        return self.from_dict(acc)

    # ---- parsing and printing ----------------------------------------

    def parse(self, text: str) -> "Polynomial":
        """Parse sums of integer/variable-power products: 3*z0^2*z1 - z2 + 7."""
        tokens: list[tuple[str, int]] = []
        pos = 0
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if m is None:
                if text[pos:].strip() == "":
                    break
                raise ValueError(f"bad token at {text[pos:pos + 20]!r}")
            pos = m.end()
            if m.group("int") is not None:
                tokens.append(("int", int(m.group("int"))))
            elif m.group("var") is not None:
                v = int(m.group("var"))
                if v > self.n:
                    raise ValueError(f"variable z{v} out of range (n = {self.n})")
                tokens.append(("var", v))
            else:
                tokens.append((m.group("op"), 0))

        acc: dict[tuple[int, ...], int] = {}
        i = 0

        def parse_term(i: int, sign: int) -> int:
            coeff = sign
            exps = [0] * self.nvars
            expect_factor = True
            while True:
                if expect_factor:
                    if i >= len(tokens):
                        raise ValueError("dangling operator at end of input")
                    kind, val = tokens[i]
                    if kind == "int":
                        coeff *= val
                        i += 1
                    elif kind == "var":
                        e = 1
                        i += 1
                        if i < len(tokens) and tokens[i][0] == "^":
                            i += 1
                            if i >= len(tokens) or tokens[i][0] != "int":
                                raise ValueError("exponent must be an integer")
                            e = tokens[i][1]
                            i += 1
                        exps[val] += e
                    else:
                        raise ValueError(f"expected a factor, got {kind!r}")
                    expect_factor = False
                else:
                    if i < len(tokens) and tokens[i][0] == "*":
                        i += 1
                        expect_factor = True
                    else:
                        break
            key = tuple(exps)
            acc[key] = acc.get(key, 0) + coeff
            return i

        if not tokens:
            raise ValueError("empty polynomial text")
        sign = 1
        while i < len(tokens) and tokens[i][0] in ("+", "-"):
            if tokens[i][0] == "-":
                sign = -sign
            i += 1
        i = parse_term(i, sign)
        while i < len(tokens):
            kind = tokens[i][0]
            if kind not in ("+", "-"):
                raise ValueError(f"expected + or - between terms, got {kind!r}")
            sign = 1
            while i < len(tokens) and tokens[i][0] in ("+", "-"):
                if tokens[i][0] == "-":
                    sign = -sign
                i += 1
            i = parse_term(i, sign)
        return self.from_dict(acc)

    def format(self, f: "Polynomial") -> str:
        if not f.terms:
            return "0"
        field = self.field
        parts: list[str] = []
        for idx, (m, c) in enumerate(f.terms):
            cs = field.symmetric(c)
            mag = abs(cs)
            factors = []
            for v, e in enumerate(m.exps):
                if e == 1:
                    factors.append(f"z{v}")
                elif e > 1:
                    factors.append(f"z{v}^{e}")
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = str(mag) + "*" + "*".join(factors)
            if idx == 0:
                parts.append("-" + body if cs < 0 else body)
            else:
                parts.append((" - " if cs < 0 else " + ") + body)
        return "".join(parts)


class Polynomial:
    """Immutable element of a PolyRing; terms descending in the ring order."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: tuple[tuple[Monomial, int], ...]):
        self.ring = ring
        self.terms = terms

    def is_zero(self) -> bool:
        return not self.terms

    def leading_monomial(self) -> Monomial:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        return self.terms[0][0]

    def leading_coefficient(self) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        return self.terms[0][1]

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(m.degree for m, _ in self.terms)

    def is_homogeneous(self) -> tuple[bool, int | None]:
        """(True, d) for a nonzero form of degree d; (True, None) for zero,
        meaning any degree; (False, None) otherwise."""
        if not self.terms:
            return (True, None)
        d = self.terms[0][0].degree
        for m, _ in self.terms[1:]:
            if m.degree != d:
                return (False, None)
        return (True, d)

    def as_dict(self) -> dict[tuple[int, ...], int]:
        return {m.exps: c for m, c in self.terms}

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        acc = self.as_dict()
        for m, c in other.terms:
            k = m.exps
            acc[k] = acc.get(k, 0) + c
        return self.ring.from_dict(acc)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        acc = self.as_dict()
        for m, c in other.terms:
            k = m.exps
            acc[k] = acc.get(k, 0) - c
        return self.ring.from_dict(acc)

    def __neg__(self) -> "Polynomial":
        p = self.ring.p
        return Polynomial(self.ring, tuple((m, p - c) for m, c in self.terms))

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        if not self.terms or not other.terms:
            return self.ring.zero
        acc: dict[tuple[int, ...], int] = {}
        for m1, c1 in self.terms:
            e1 = m1.exps
            for m2, c2 in other.terms:
                k = tuple(a + b for a, b in zip(e1, m2.exps))
                acc[k] = acc.get(k, 0) + c1 * c2
        return self.ring.from_dict(acc)

    def scale(self, c: int) -> "Polynomial":
        c = self.ring.field.normalize(c)
        if c == 0:
            return self.ring.zero
        if c == 1:
            return self
        p = self.ring.p
        return Polynomial(self.ring, tuple((m, cc * c % p) for m, cc in self.terms))

    def mul_term(self, m: Monomial, c: int) -> "Polynomial":
        c = self.ring.field.normalize(c)
        if c == 0:
            return self.ring.zero
        p = self.ring.p
        e = m.exps
        return Polynomial(
            self.ring,
            tuple(
                (Monomial(tuple(a + b for a, b in zip(mm.exps, e))), cc * c % p)
                for mm, cc in self.terms
            ),
        )

    def monic(self) -> "Polynomial":
        if not self.terms:
            return self
        return self.scale(self.ring.field.inv(self.terms[0][1]))

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise ValueError("negative power")
        return reduce(lambda a, b: a * b, [self] * k, self.ring.one)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Polynomial)
            and other.ring == self.ring
            and other.terms == self.terms
        )

    def __hash__(self) -> int:
        return hash((self.ring, self.terms))

    def __str__(self) -> str:
        return self.ring.format(self)

    def __repr__(self) -> str:
        return f"<{self.ring.format(self)}>"

    def _check(self, other: "Polynomial") -> None:
        if other.ring != self.ring:
            raise ValueError("mixed polynomial rings")


class FreeModuleElement:
    """Element of a graded free module with generator degrees `twists`.

    The j-th summand is R(-twists[j]); a homogeneous element of degree D has
    entry j either zero or a form of degree D - twists[j].
    """

    __slots__ = ("ring", "entries", "twists")

    def __init__(self, ring: PolyRing, entries: Sequence[Polynomial], twists: Sequence[int]):
        if len(entries) != len(twists):
            raise ValueError("entry/twist length mismatch")
        self.ring = ring
        self.entries = tuple(entries)
        self.twists = tuple(twists)

    def is_zero(self) -> bool:
        return all(e.is_zero() for e in self.entries)

    def degree(self) -> int | None:
        """Degree of a homogeneous element, None for zero."""
        degs = set()
        for e, tw in zip(self.entries, self.twists):
            if not e.is_zero():
                degs.add(e.degree() + tw)
        if not degs:
            return None
        if len(degs) > 1:
            raise ValueError("element is not homogeneous")
        return degs.pop()

    def is_homogeneous(self) -> bool:
        try:
            self.degree()
        except ValueError:
            return False
        for e, _ in zip(self.entries, self.twists):
            if not e.is_homogeneous()[0]:
                return False
        return True

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, FreeModuleElement)
            and other.ring == self.ring
            and other.entries == self.entries
            and other.twists == self.twists
        )

    def __repr__(self) -> str:
        inner = ", ".join(self.ring.format(e) for e in self.entries)
        return f"FreeModuleElement[{inner}]"


def polynomials_equal_sets(a: Iterable[Polynomial], b: Iterable[Polynomial]) -> bool:
    return sorted(repr(x) for x in a) == sorted(repr(x) for x in b)
