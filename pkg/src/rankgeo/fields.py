"""Exact arithmetic in the tower F_p <= F_q <= F_{q^m} with q = p^e.

Elements are stored as canonical integer codes.  An element of F_q is the
integer sum(c_j * p**j) where (c_0, ..., c_{e-1}) are its F_p-coordinates in
the power basis of the degree-e modulus ``gq``; an element of F_{q^m} is
sum(a_i * q**i) where (a_0, ..., a_{m-1}) are its F_q-coordinate codes in the
power basis of the degree-m modulus ``gqm``.  The integer code of an element
therefore *is* its dense coefficient vector, packed positionally; use
``FieldTower.ext_coeffs`` / ``base_coeffs`` to unpack.

When a modulus is not supplied it is chosen canonically as the monic
irreducible polynomial with the smallest integer encoding of its coefficient
vector (lexicographic from the leading coefficient down).  This choice is
deterministic across runs; for F_8 and F_16 over F_2 it gives x^3 + x + 1
and x^4 + x + 1.

Multiplicative structure uses discrete log/antilog tables when the field has
at most 2^16 elements (built lazily); above that size the same operations
fall back to direct polynomial arithmetic, with identical results.  Towers
with more than 2^20 elements are rejected at construction: the package
targets desk-scale exhaustive verification.
"""

from __future__ import annotations

import itertools
from functools import cached_property
from typing import Iterable, Sequence

from .errors import DomainError

ORDER_LIMIT = 1 << 20
_TABLE_LIMIT = 1 << 16


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _prime_factors(n: int) -> tuple[int, ...]:
    """Distinct prime factors of n by trial division (n <= 2^20 here)."""
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out.append(n)
    return tuple(out)


# ---------------------------------------------------------------------------
# field objects (elements are ints 0 .. order-1)
# ---------------------------------------------------------------------------

class Field:
    """Common interface of PrimeField and ExtField."""

    order: int
    char: int

    def add(self, a: int, b: int) -> int:
        raise NotImplementedError

    def neg(self, a: int) -> int:
        raise NotImplementedError

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        raise NotImplementedError

    def inv(self, a: int) -> int:
        raise NotImplementedError

    def pow(self, a: int, n: int) -> int:
        raise NotImplementedError

    def elements(self) -> range:
        return range(self.order)

    def nonzero_elements(self) -> range:
        return range(1, self.order)

    def check_element(self, a: int) -> int:
        if not isinstance(a, int) or not 0 <= a < self.order:
            raise DomainError(f"{a!r} is not an element code of {self}")
        return a


class PrimeField(Field):
    """F_p with elements 0 .. p-1 under mod-p arithmetic."""

    def __init__(self, p: int):
        if not is_prime(p):
            raise DomainError(f"p = {p} is not prime")
        self.order = p
        self.char = p

    def add(self, a, b):
        return (a + b) % self.order

    def neg(self, a):
        return (-a) % self.order

    def mul(self, a, b):
        return (a * b) % self.order

    def inv(self, a):
        if a % self.order == 0:
            raise DomainError("inversion of zero")
        return pow(a, -1, self.order)

    def pow(self, a, n):
        if a == 0:
            return 0 if n else 1
        return pow(a, n % (self.order - 1), self.order)

    def __repr__(self):
        return f"GF({self.order})"


class ExtField(Field):
    """F_{s^d} built as base[x]/(modulus), modulus monic irreducible of
    degree d over the base field.  Element code = base-s positional packing
    of the coefficient vector."""

    def __init__(self, base: Field, modulus: Sequence[int], check: bool = True):
        modulus = tuple(modulus)
        deg = len(modulus) - 1
        if deg < 1:
            raise DomainError("extension modulus must have degree >= 1")
        if modulus[-1] != 1:
            raise DomainError("extension modulus must be monic")
        for c in modulus:
            base.check_element(c)
        if check and not poly_is_irreducible(base, modulus):
            raise DomainError(
                f"modulus {list(modulus)} is reducible over {base}")
        self.base = base
        self.deg = deg
        self.modulus = modulus
        self.order = base.order ** deg
        self.char = base.char
        # x^(deg+i) mod modulus for i = 0 .. deg-2, used by _mul_raw
        red = []
        cur = [base.neg(c) for c in modulus[:-1]]  # x^deg mod modulus
        red.append(tuple(cur))
        for _ in range(deg - 2):
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                for j, r in enumerate(red[0]):
                    if r:
                        cur[j] = base.add(cur[j], base.mul(top, r))
            red.append(tuple(cur))
        self._red = tuple(red)

    # -- coefficient packing ------------------------------------------------

    def to_coeffs(self, a: int) -> tuple[int, ...]:
        s = self.base.order
        out = []
        for _ in range(self.deg):
            a, c = divmod(a, s)
            out.append(c)
        return tuple(out)

    def from_coeffs(self, coeffs: Iterable[int]) -> int:
        s = self.base.order
        a = 0
        for c in reversed(tuple(coeffs)):
            a = a * s + c
        return a

    # -- arithmetic ---------------------------------------------------------

    def add(self, a, b):
        if self.char == 2:
            return a ^ b  # base order is a power of two, digits never carry
        s = self.base.order
        out, mult = 0, 1
        for _ in range(self.deg):
            a, ca = divmod(a, s)
            b, cb = divmod(b, s)
            out += self.base.add(ca, cb) * mult
            mult *= s
        return out

    def neg(self, a):
        if self.char == 2:
            return a
        s = self.base.order
        out, mult = 0, 1
        for _ in range(self.deg):
            a, ca = divmod(a, s)
            out += self.base.neg(ca) * mult
            mult *= s
        return out

    def _mul_raw(self, a: int, b: int) -> int:
        """Schoolbook coefficient product reduced by the modulus."""
        if a == 0 or b == 0:
            return 0
        base = self.base
        d = self.deg
        ca, cb = self.to_coeffs(a), self.to_coeffs(b)
        conv = [0] * (2 * d - 1)
        for i, x in enumerate(ca):
            if x:
                for j, y in enumerate(cb):
                    if y:
                        conv[i + j] = base.add(conv[i + j], base.mul(x, y))
        for i in range(2 * d - 2, d - 1, -1):
            c = conv[i]
            if c:
                for j, r in enumerate(self._red[i - d]):
                    if r:
                        conv[j] = base.add(conv[j], base.mul(c, r))
        return self.from_coeffs(conv[:d])

    @cached_property
    def _tables(self):
        if self.order > _TABLE_LIMIT:
            return None
        n = self.order - 1
        if n == 1:
            return ([1], {1: 0})
        g = self._find_generator()
        exp = [1] * n
        log = [0] * self.order
        cur = 1
        for i in range(n):
            exp[i] = cur
            log[cur] = i
            cur = self._mul_raw(cur, g)
        return (exp, log)

    def _find_generator(self) -> int:
        n = self.order - 1
        facs = _prime_factors(n)
        for g in range(2, self.order):
            if all(self._pow_raw(g, n // f) != 1 for f in facs):
                return g
        raise AssertionError("no multiplicative generator found")

    def _pow_raw(self, a: int, n: int) -> int:
        r = 1
        while n:
            if n & 1:
                r = self._mul_raw(r, a)
            a = self._mul_raw(a, a)
            n >>= 1
        return r

    def mul(self, a, b):
        t = self._tables
        if t is None:
            return self._mul_raw(a, b)
        if a == 0 or b == 0:
            return 0
        exp, log = t
        return exp[(log[a] + log[b]) % (self.order - 1)]

    def inv(self, a):
        if a == 0:
            raise DomainError("inversion of zero")
        t = self._tables
        if t is None:
            return self._pow_raw(a, self.order - 2)
        exp, log = t
        return exp[(-log[a]) % (self.order - 1)]

    def pow(self, a, n):
        if a == 0:
            return 0 if n else 1
        n %= self.order - 1
        t = self._tables
        if t is None:
            return self._pow_raw(a, n)
        exp, log = t
        return exp[(log[a] * n) % (self.order - 1)]

    def __repr__(self):
        return f"GF({self.order})"


# ---------------------------------------------------------------------------
# polynomials over a Field (coefficient tuples, constant term first)
# ---------------------------------------------------------------------------

def _poly_trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_mulmod(F: Field, a: Sequence[int], b: Sequence[int],
                 mod: Sequence[int]) -> list[int]:
    conv = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    conv[i + j] = F.add(conv[i + j], F.mul(x, y))
    return _poly_mod(F, conv, mod)


def _poly_mod(F: Field, a: Sequence[int], mod: Sequence[int]) -> list[int]:
    a = list(a)
    d = len(mod) - 1
    lead_inv = F.inv(mod[-1])
    for i in range(len(a) - 1, d - 1, -1):
        c = a[i]
        if c:
            f = F.mul(c, lead_inv)
            for j in range(d + 1):
                a[i - d + j] = F.sub(a[i - d + j], F.mul(f, mod[j]))
    del a[d:]
    return _poly_trim(a)


def _poly_powmod(F: Field, a: Sequence[int], n: int,
                 mod: Sequence[int]) -> list[int]:
    r = [1]
    a = _poly_mod(F, a, mod)
    while n:
        if n & 1:
            r = _poly_mulmod(F, r, a, mod)
        a = _poly_mulmod(F, a, a, mod)
        n >>= 1
    return r


def _poly_gcd(F: Field, a: Sequence[int], b: Sequence[int]) -> list[int]:
    a, b = _poly_trim(list(a)), _poly_trim(list(b))
    while b:
        a, b = b, _poly_mod(F, a, b)
    return a


def poly_is_irreducible(F: Field, poly: Sequence[int]) -> bool:
    """Deterministic irreducibility test for a monic polynomial over F.

    poly of degree d is irreducible iff x^(s^d) = x mod poly and, for every
    prime divisor l of d, gcd(x^(s^(d/l)) - x, poly) = 1 (s = |F|).
    """
    poly = tuple(poly)
    d = len(poly) - 1
    if d < 1:
        return False
    if d == 1:
        return True
    s = F.order
    x = [0, 1]
    # frob[j] = x^(s^j) mod poly, computed by iterated s-th powers
    cur = list(x)
    frob = {0: list(x)}
    for j in range(1, d + 1):
        cur = _poly_powmod(F, cur, s, poly)
        frob[j] = list(cur)
    if _poly_trim([F.sub(c1, c2) for c1, c2 in
                   itertools.zip_longest(frob[d], x, fillvalue=0)]):
        return False
    for l in _prime_factors(d):
        diff = [F.sub(c1, c2) for c1, c2 in
                itertools.zip_longest(frob[d // l], x, fillvalue=0)]
        g = _poly_gcd(F, poly, diff)
        if len(g) != 1:
            return False
    return True


def lex_min_irreducible(F: Field, degree: int) -> tuple[int, ...]:
    """Smallest monic irreducible of the given degree over F.

    "Smallest" means minimal canonical integer encoding of the coefficient
    vector, i.e. lexicographic comparison from the leading coefficient down;
    over F_2 this yields x^3 + x + 1 and x^4 + x + 1 for degrees 3 and 4.
    Deterministic across runs.
    """
    if degree < 1:
        raise DomainError("degree must be >= 1")
    if degree == 1:
        return (0, 1)  # the polynomial x
    # product varies the last slot fastest; read it as (c_{d-1}, ..., c_0)
    for rev in itertools.product(range(F.order), repeat=degree):
        cand = tuple(reversed(rev)) + (1,)
        if poly_is_irreducible(F, cand):
            return cand
    raise AssertionError("no irreducible polynomial found")  # unreachable


# ---------------------------------------------------------------------------
# the tower
# ---------------------------------------------------------------------------

class FieldTower:
    """Immutable arithmetic context F_p <= F_q <= F_{q^m}, q = p^e.

    All operations are pure functions of their integer-coded inputs, so a
    tower can be shared freely across concurrent workers.
    """

    __slots__ = ("p", "e", "m", "q", "order", "gq", "gqm", "prime",
                 "base", "ext", "_key")

    def __init__(self, p: int, e: int = 1, m: int = 1,
                 gq: Sequence[int] | None = None,
                 gqm: Sequence[int] | None = None):
        if not is_prime(p):
            raise DomainError(f"p = {p} is not prime")
        if e < 1 or m < 1:
            raise DomainError("extension degrees must be >= 1")
        if p ** (e * m) > ORDER_LIMIT:
            raise DomainError(
                f"tower order {p}^{e * m} exceeds the limit 2^20")
        self.p, self.e, self.m = p, e, m
        self.q = p ** e
        self.order = self.q ** m
        self.prime = PrimeField(p)

        if gq is None:
            gq = lex_min_irreducible(self.prime, e)
        else:
            gq = tuple(gq)
            if len(gq) != e + 1:
                raise DomainError(f"gq must have degree {e}")
        self.gq = gq
        if e == 1:
            # degree-1 moduli are always irreducible; still insist on shape
            if gq[-1] != 1:
                raise DomainError("gq must be monic")
            for c in gq:
                self.prime.check_element(c)
            self.base = self.prime
        else:
            # monicity / entries / irreducibility checked by ExtField
            self.base = ExtField(self.prime, gq)

        if gqm is None:
            gqm = lex_min_irreducible(self.base, m)
        else:
            gqm = tuple(gqm)
            if len(gqm) != m + 1:
                raise DomainError(f"gqm must have degree {m}")
        self.gqm = gqm
        self.ext = ExtField(self.base, gqm)
        self._key = (p, e, m, self.gq, self.gqm)

    # -- identity -----------------------------------------------------------

    def key(self) -> tuple:
        return self._key

    def __eq__(self, other):
        return isinstance(other, FieldTower) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return f"FieldTower(p={self.p}, e={self.e}, m={self.m})"

    # -- element maps ---------------------------------------------------------

    def ext_coeffs(self, a: int) -> tuple[int, ...]:
        """F_q-coordinate codes of an F_{q^m} element, constant term first."""
        q = self.q
        out = []
        for _ in range(self.m):
            a, c = divmod(a, q)
            out.append(c)
        return tuple(out)

    def ext_from_coeffs(self, coeffs: Iterable[int]) -> int:
        a = 0
        for c in reversed(tuple(coeffs)):
            a = a * self.q + c
        return a

    def base_coeffs(self, c: int) -> tuple[int, ...]:
        """F_p-coordinates of an F_q element, constant term first."""
        p = self.p
        out = []
        for _ in range(self.e):
            c, d = divmod(c, p)
            out.append(d)
        return tuple(out)

    def base_from_coeffs(self, coeffs: Iterable[int]) -> int:
        c = 0
        for d in reversed(tuple(coeffs)):
            c = c * self.p + d
        return c

    def frobenius(self, x: int, i: int = 1) -> int:
        """x^(q^i); the identity when i is a multiple of m."""
        i %= self.m
        if i == 0:
            return x
        return self.ext.pow(x, self.q ** i)

    def trace_to_base(self, x: int) -> int:
        """Trace from F_{q^m} down to F_q (an F_q-linear surjection)."""
        ext = self.ext
        acc = x
        y = x
        for _ in range(self.m - 1):
            y = self.frobenius(y, 1)
            acc = ext.add(acc, y)
        coeffs = self.ext_coeffs(acc)
        if any(coeffs[1:]):
            raise AssertionError("trace left the base field")
        return coeffs[0]

    def flatten(self, vec: Sequence[int]) -> tuple[int, ...]:
        """Coordinate-wise F_q-expansion of a vector over F_{q^m}.

        Injective and F_q-linear, of length m * len(vec); ``unflatten`` is
        the declared inverse.
        """
        out = []
        for a in vec:
            out.extend(self.ext_coeffs(a))
        return tuple(out)

    def unflatten(self, flat: Sequence[int]) -> tuple[int, ...]:
        if len(flat) % self.m:
            raise DomainError("flattened length is not a multiple of m")
        m = self.m
        return tuple(self.ext_from_coeffs(flat[i:i + m])
                     for i in range(0, len(flat), m))


# ---------------------------------------------------------------------------
# operation-shaped front ends
# ---------------------------------------------------------------------------

def make_tower(p: int, e: int = 1, m: int = 1,
               gq: Sequence[int] | None = None,
               gqm: Sequence[int] | None = None) -> FieldTower:
    """Validated tower; omitted polynomials default to the lexicographic
    minimum, so the construction is deterministic across runs."""
    return FieldTower(p, e, m, gq=gq, gqm=gqm)


def arith(tower: FieldTower, op: str, *operands: int) -> int:
    """Dispatch {add, mul, neg, inv, pow} over F_{q^m} element codes."""
    ext = tower.ext
    if op == "add":
        a, b = operands
        return ext.add(a, b)
    if op == "mul":
        a, b = operands
        return ext.mul(a, b)
    if op == "neg":
        (a,) = operands
        return ext.neg(a)
    if op == "inv":
        (a,) = operands
        return ext.inv(a)
    if op == "pow":
        a, n = operands
        return ext.pow(a, n)
    raise DomainError(f"unknown field operation {op!r}")


def frobenius_q(tower: FieldTower, x: int, i: int = 1) -> int:
    return tower.frobenius(x, i)


def trace_to_base(tower: FieldTower, x: int) -> int:
    return tower.trace_to_base(x)


def flatten(tower: FieldTower, vec: Sequence[int]) -> tuple[int, ...]:
    return tower.flatten(vec)


def unflatten(tower: FieldTower, flat: Sequence[int]) -> tuple[int, ...]:
    return tower.unflatten(flat)
