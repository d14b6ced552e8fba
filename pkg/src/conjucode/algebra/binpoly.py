"""Polynomials over GF(2).

A polynomial is held as a Python int whose bit i is the coefficient of x^i,
which makes ascending coefficient order the natural one: the bit string
"1110010" is 1 + x + x^2 + x^5.  The zero polynomial has degree -1.
"""

from __future__ import annotations

import re
from functools import reduce
from typing import Iterable, Iterator, Sequence

ZERO_DEGREE = -1  # degree of the zero polynomial, below every real degree


def _clmul(a: int, b: int) -> int:
    if a.bit_length() < b.bit_length():
        a, b = b, a
    c = 0
    while b:
        if b & 1:
            c ^= a
        a <<= 1
        b >>= 1
    return c


def _divmod(a: int, b: int) -> tuple[int, int]:
    if b == 0:
        raise ZeroDivisionError("division by the zero polynomial")
    db = b.bit_length()
    q = 0
    while a.bit_length() >= db:
        s = a.bit_length() - db
        q |= 1 << s
        a ^= b << s
    return q, a


def _mod(a: int, b: int) -> int:
    if b == 0:
        raise ZeroDivisionError("division by the zero polynomial")
    db = b.bit_length()
    while a.bit_length() >= db:
        a ^= b << (a.bit_length() - db)
    return a


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, _mod(a, b)
    return a


class BinPoly:
    """Immutable polynomial over GF(2)."""

    __slots__ = ("bits",)

    def __init__(self, bits: int = 0):
        if bits < 0:
            raise ValueError("coefficient bits must be non-negative")
        object.__setattr__(self, "bits", int(bits))

    def __setattr__(self, name, value):
        raise AttributeError("BinPoly is immutable")

    # -- construction --------------------------------------------------------
    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int]) -> "BinPoly":
        bits = 0
        for i, c in enumerate(coeffs):
            if c & 1:
                bits |= 1 << i
        return cls(bits)

    @classmethod
    def from_exponents(cls, exps: Iterable[int]) -> "BinPoly":
        bits = 0
        for e in exps:
            bits ^= 1 << e
        return cls(bits)

    @classmethod
    def x_n_plus_1(cls, n: int) -> "BinPoly":
        return cls((1 << n) | 1)

    # -- basic data ------------------------------------------------------------
    @property
    def degree(self) -> int:
        return self.bits.bit_length() - 1

    def is_zero(self) -> bool:
        return self.bits == 0

    def coeffs(self, length: int | None = None) -> tuple[int, ...]:
        """Ascending coefficients; padded (or checked) to ``length`` if given."""
        m = self.bits.bit_length() if length is None else length
        if length is not None and self.bits.bit_length() > length:
            raise ValueError(f"degree {self.degree} does not fit in length {length}")
        return tuple((self.bits >> i) & 1 for i in range(m))

    def __getitem__(self, i: int) -> int:
        return (self.bits >> i) & 1

    def weight(self) -> int:
        return self.bits.bit_count()

    def __call__(self, x: int) -> int:
        """Evaluate at x in GF(2)."""
        return self.bits & 1 if x == 0 else self.weight() & 1

    # -- arithmetic ------------------------------------------------------------
    def __add__(self, other: "BinPoly") -> "BinPoly":
        return BinPoly(self.bits ^ _bits(other))

    __sub__ = __add__
    __radd__ = __add__

    def __mul__(self, other: "BinPoly") -> "BinPoly":
        return BinPoly(_clmul(self.bits, _bits(other)))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "BinPoly":
        if e < 0:
            raise ValueError("negative exponent")
        result, base = 1, self.bits
        while e:
            if e & 1:
                result = _clmul(result, base)
            base = _clmul(base, base)
            e >>= 1
        return BinPoly(result)

    def __divmod__(self, other: "BinPoly") -> tuple["BinPoly", "BinPoly"]:
        q, r = _divmod(self.bits, _bits(other))
        return BinPoly(q), BinPoly(r)

    def __floordiv__(self, other: "BinPoly") -> "BinPoly":
        return divmod(self, other)[0]

    def __mod__(self, other: "BinPoly") -> "BinPoly":
        return BinPoly(_mod(self.bits, _bits(other)))

    def divides(self, other: "BinPoly") -> bool:
        """True iff self | other (the zero polynomial divides only zero)."""
        if self.bits == 0:
            return _bits(other) == 0
        return _mod(_bits(other), self.bits) == 0

    def __eq__(self, other) -> bool:
        if isinstance(other, BinPoly):
            return self.bits == other.bits
        if isinstance(other, int):
            return self.bits == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("BinPoly", self.bits))

    def __bool__(self) -> bool:
        return self.bits != 0

    def __lt__(self, other: "BinPoly") -> bool:
        # degree first, then bits; gives a stable total order for sorting factors
        return (self.degree, self.bits) < (other.degree, other.bits)

    def __repr__(self) -> str:
        return f"BinPoly({self})"

    def __str__(self) -> str:
        return format_sum(self)


def _bits(p) -> int:
    if isinstance(p, BinPoly):
        return p.bits
    if isinstance(p, int):
        return p
    raise TypeError(f"expected BinPoly, got {type(p).__name__}")


ONE = BinPoly(1)
X = BinPoly(2)


def poly_divmod(num: BinPoly, den: BinPoly) -> tuple[BinPoly, BinPoly]:
    """Return (q, r) with num = q*den + r and deg r < deg den."""
    return divmod(num, den)


def poly_gcd(p: BinPoly, q: BinPoly) -> BinPoly:
    if p.is_zero() and q.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    return BinPoly(_gcd(p.bits, q.bits))


def poly_gcd_many(polys: Iterable[BinPoly]) -> BinPoly:
    g = 0
    for p in polys:
        g = _gcd(g, p.bits) if g else p.bits
        if g == 1:
            break
    return BinPoly(g)


def poly_lcm(p: BinPoly, q: BinPoly) -> BinPoly:
    if p.is_zero() or q.is_zero():
        raise ValueError("lcm is only defined for nonzero polynomials")
    return (p * q) // poly_gcd(p, q)


def poly_reciprocal(p: BinPoly) -> BinPoly:
    """x^deg(p) * p(1/x); trailing zeros of the reversed sequence are dropped."""
    if p.is_zero():
        raise ValueError("reciprocal of the zero polynomial")
    d = p.degree
    bits = p.bits
    out = 0
    for i in range(d + 1):
        if (bits >> i) & 1:
            out |= 1 << (d - i)
    return BinPoly(out)


def poly_mulmod(a: BinPoly, b: BinPoly, m: BinPoly) -> BinPoly:
    return BinPoly(_mod(_clmul(a.bits, b.bits), m.bits))


def poly_powmod(a: BinPoly, e: int, m: BinPoly) -> BinPoly:
    result, base = 1, _mod(a.bits, m.bits)
    while e:
        if e & 1:
            result = _mod(_clmul(result, base), m.bits)
        base = _mod(_clmul(base, base), m.bits)
        e >>= 1
    return BinPoly(_mod(result, m.bits))


def derivative(p: BinPoly) -> BinPoly:
    # only odd powers survive in characteristic 2
    return BinPoly((p.bits >> 1) & _even_mask(p.degree))


def _even_mask(deg: int) -> int:
    m = 0
    for i in range(0, max(deg, 0) + 1, 2):
        m |= 1 << i
    return m


def _sqrt(p: BinPoly) -> BinPoly:
    """Square root of a polynomial with only even powers."""
    out = 0
    bits = p.bits
    i = 0
    while bits >> (2 * i):
        if (bits >> (2 * i)) & 1:
            out |= 1 << i
        i += 1
    return BinPoly(out)


# --- irreducibility and factorization ------------------------------------------

def _prime_factors(n: int) -> list[int]:
    out, p = [], 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def is_irreducible(f: BinPoly) -> bool:
    """Rabin's test: f of degree d is irreducible iff x^(2^d) = x (mod f)
    and gcd(x^(2^(d/q)) - x, f) = 1 for each prime q | d."""
    d = f.degree
    if d < 1:
        return False
    if d == 1:
        return True

    def frob(k: int) -> BinPoly:
        y = X % f
        for _ in range(k):
            y = poly_mulmod(y, y, f)
        return y

    if frob(d) != X % f:
        return False
    for q in _prime_factors(d):
        if poly_gcd(frob(d // q) + X, f) != ONE:
            return False
    return True


def _berlekamp_split(f: BinPoly) -> list[BinPoly]:
    """Split a squarefree f with f(0) = 1 into irreducible factors."""
    from .binmatrix import BinMatrix

    d = f.degree
    if d <= 1:
        return [f]
    # Q - I where row i is x^(2i) mod f; Berlekamp subalgebra = left kernel
    rows = []
    xi2 = ONE
    x2 = poly_mulmod(X, X, f)
    for i in range(d):
        rows.append(xi2.bits ^ (1 << i))
        xi2 = poly_mulmod(xi2, x2, f)
    kernel = BinMatrix(rows, d).transpose().nullspace()
    if kernel.nrows == 1:
        return [f]  # only the constants: irreducible
    factors = [f]
    for v in kernel.rows:
        g = BinPoly(v)
        if g.degree < 1:
            continue
        nxt = []
        for h in factors:
            if h.degree <= 1:
                nxt.append(h)
                continue
            a = poly_gcd(h, g % h)
            if 0 < a.degree < h.degree:
                nxt.extend([a, h // a])
            else:
                nxt.append(h)
        factors = nxt
        if len(factors) == kernel.nrows:
            break
    return factors


def _squarefree_parts(f: BinPoly) -> list[tuple[BinPoly, int]]:
    """Yun-style squarefree decomposition in characteristic 2."""
    if f.degree < 1:
        return []
    out: list[tuple[BinPoly, int]] = []
    df = derivative(f)
    if df.is_zero():
        return [(g, 2 * e) for g, e in _squarefree_parts(_sqrt(f))]
    c = poly_gcd(f, df)
    w = f // c
    i = 1
    while w.degree >= 1:
        y = poly_gcd(w, c)
        z = w // y
        if z.degree >= 1:
            out.append((z, i))
        i += 1
        w, c = y, c // y
    if c.degree >= 1:
        out.extend((g, 2 * e) for g, e in _squarefree_parts(_sqrt(c)))
    return out


def factor(f: BinPoly) -> list[tuple[BinPoly, int]]:
    """Complete factorization of a nonzero f into irreducibles with multiplicity,
    sorted by (degree, bits)."""
    if f.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    counts: dict[BinPoly, int] = {}
    # pull out powers of x first so every remaining factor has f(0) = 1
    low = (f.bits & -f.bits).bit_length() - 1
    if low:
        counts[X] = low
        f = BinPoly(f.bits >> low)
    for part, e in _squarefree_parts(f):
        for g in _berlekamp_split(part):
            counts[g] = counts.get(g, 0) + e
    return sorted(counts.items())


def factor_xn_plus_1(n: int) -> list[tuple[BinPoly, int]]:
    """Irreducible factorization of x^n + 1 over GF(2).

    With n = m * 2^e and m odd, x^n + 1 = (x^m + 1)^(2^e) and x^m + 1 is
    squarefree, so only x^m + 1 needs splitting.
    """
    if n < 1:
        raise ValueError("n must be positive")
    m, e = n, 0
    while m % 2 == 0:
        m //= 2
        e += 1
    return sorted((g, 1 << e) for g in _berlekamp_split(BinPoly.x_n_plus_1(m)))


def expand(factors: Sequence[tuple[BinPoly, int]]) -> BinPoly:
    return reduce(lambda acc, fe: acc * fe[0] ** fe[1], factors, ONE)


def divisors_of_xn_plus_1(n: int) -> Iterator[BinPoly]:
    """Every divisor of x^n + 1 exactly once (prod of (e_i + 1) of them)."""
    yield from divisors_from_factors(factor_xn_plus_1(n))


def divisors_from_factors(factors: Sequence[tuple[BinPoly, int]]) -> Iterator[BinPoly]:
    def rec(i: int, acc: BinPoly) -> Iterator[BinPoly]:
        if i == len(factors):
            yield acc
            return
        g, e = factors[i]
        p = acc
        for _ in range(e + 1):
            yield from rec(i + 1, p)
            p = p * g

    yield from rec(0, ONE)


def count_divisors(n: int) -> int:
    return reduce(lambda a, fe: a * (fe[1] + 1), factor_xn_plus_1(n), 1)


# --- text forms -------------------------------------------------------------------

def format_bits(p: BinPoly) -> str:
    """Ascending coefficient string; "0" for the zero polynomial."""
    if p.is_zero():
        return "0"
    return "".join(str(c) for c in p.coeffs())


def format_sum(p: BinPoly) -> str:
    if p.is_zero():
        return "0"
    terms = []
    for i in range(p.degree + 1):
        if p[i]:
            terms.append("1" if i == 0 else "x" if i == 1 else f"x^{i}")
    return "+".join(terms)


def format_factored(p: BinPoly) -> str:
    """Product of irreducible factors, e.g. "(1+x)^2*(1+x+x^3)"."""
    if p.degree < 1:
        return format_sum(p)
    parts = []
    for g, e in factor(p):
        s = f"({format_sum(g)})"
        parts.append(s if e == 1 else f"{s}^{e}")
    return "*".join(parts)


_TOKEN = re.compile(r"\s*(?:(\d+)|(x)|(\^)|(\+)|(\*)|(\()|(\)))")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks: list[tuple[str, str, int]] = []
        pos = 0
        while pos < len(text):
            if text[pos:].strip() == "":
                break
            m = _TOKEN.match(text, pos)
            if not m:
                raise ValueError(f"unexpected character {text[pos]!r} at position {pos}")
            kind = m.lastindex
            self.toks.append(("num x ^ + * ( )".split()[kind - 1], m.group(kind), m.start(kind)))
            pos = m.end()
        self.i = 0

    def peek(self) -> str | None:
        return self.toks[self.i][0] if self.i < len(self.toks) else None

    def take(self, kind: str) -> str:
        if self.peek() != kind:
            where = self.toks[self.i][2] if self.i < len(self.toks) else len(self.text)
            raise ValueError(f"expected {kind!r} at position {where} in {self.text!r}")
        tok = self.toks[self.i][1]
        self.i += 1
        return tok

    def expr(self) -> BinPoly:
        acc = self.term()
        while self.peek() == "+":
            self.take("+")
            acc = acc + self.term()
        return acc

    def term(self) -> BinPoly:
        acc = self.factor()
        while self.peek() in ("*", "(", "x"):
            if self.peek() == "*":
                self.take("*")
            acc = acc * self.factor()
        return acc

    def factor(self) -> BinPoly:
        kind = self.peek()
        if kind == "(":
            self.take("(")
            base = self.expr()
            self.take(")")
        elif kind == "x":
            self.take("x")
            base = X
        elif kind == "num":
            v = int(self.take("num"))
            if v not in (0, 1):
                raise ValueError(f"coefficient {v} is not in GF(2)")
            base = BinPoly(v)
        else:
            where = self.toks[self.i][2] if self.i < len(self.toks) else len(self.text)
            raise ValueError(f"expected a term at position {where} in {self.text!r}")
        if self.peek() == "^":
            self.take("^")
            base = base ** int(self.take("num"))
        return base


def parse_poly(text: str) -> BinPoly:
    """Parse either an ascending bit string ("1110010") or an expression such
    as "1+x^2+x^4", "(1+x)^2*(1+x+x^3)"."""
    s = text.strip()
    if not s:
        raise ValueError("empty polynomial")
    if re.fullmatch(r"[01]+", s):
        return BinPoly.from_coeffs(int(c) for c in s)
    p = _Parser(s)
    out = p.expr()
    if p.i != len(p.toks):
        raise ValueError(f"trailing input at position {p.toks[p.i][2]} in {text!r}")
    return out


__all__ = [
    "BinPoly", "ONE", "X", "ZERO_DEGREE",
    "poly_divmod", "poly_gcd", "poly_gcd_many", "poly_lcm", "poly_reciprocal",
    "poly_mulmod", "poly_powmod", "is_irreducible", "factor", "factor_xn_plus_1",
    "expand", "divisors_of_xn_plus_1", "divisors_from_factors", "count_divisors",
    "format_bits", "format_sum", "format_factored", "parse_poly"
]
