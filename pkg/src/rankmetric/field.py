"""Arithmetic in prime fields F_q and their extensions F_{q^m}.

An element of F_{q^m} = F_q[x]/(f) is stored as an integer in [0, q^m):
the base-q digits of the integer are the coefficients of its residue
polynomial, lowest order first.  Under the polynomial basis the digits are
exactly the element's coordinate vector over F_q, so for q = 2 an element
index doubles as the bitmask of its coordinates.

Fields are value objects: two Field instances with the same (q, m, modulus)
are interchangeable, and all operations are pure.  Small fields (order up to
``limits.FIELD_TABLE_LIMIT``) get log/exp tables for constant-time
multiplication; larger ones fall back to polynomial arithmetic.
"""

from __future__ import annotations

import functools
from typing import Iterable, Iterator, Sequence

from .limits import FIELD_TABLE_LIMIT


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality test (desk-scale inputs)."""
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


def _prime_factors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


# ---------------------------------------------------------------------------
# Polynomials over F_q as trimmed low-order-first coefficient tuples.
# Only what the irreducibility test needs; element arithmetic lives in Field.

def _ptrim(c: Sequence[int]) -> tuple[int, ...]:
    i = len(c)
    while i > 0 and c[i - 1] == 0:
        i -= 1
    return tuple(c[:i])


def _pmod(a: Sequence[int], f: Sequence[int], q: int) -> tuple[int, ...]:
    # f monic
    a = list(a)
    df = len(f) - 1
    while len(a) - 1 >= df and a:
        lead = a[-1]
        if lead:
            shift = len(a) - 1 - df
            for i, fi in enumerate(f):
                a[shift + i] = (a[shift + i] - lead * fi) % q
        a.pop()
    return _ptrim(a)


def _pmulmod(a: Sequence[int], b: Sequence[int], f: Sequence[int], q: int) -> tuple[int, ...]:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % q
    return _pmod(out, f, q)


def _ppowmod(a: Sequence[int], e: int, f: Sequence[int], q: int) -> tuple[int, ...]:
    result: tuple[int, ...] = (1,)
    base = _pmod(a, f, q)
    while e:
        if e & 1:
            result = _pmulmod(result, base, f, q)
        base = _pmulmod(base, base, f, q)
        e >>= 1
    return result


def _pgcd(a: Sequence[int], b: Sequence[int], q: int) -> tuple[int, ...]:
    a, b = _ptrim(a), _ptrim(b)
    while b:
        inv = pow(b[-1], q - 2, q)
        monic = tuple(x * inv % q for x in b)
        a, b = b, _pmod(a, monic, q)
    return a


def is_irreducible(coeffs: Sequence[int], q: int) -> bool:
    """Rabin test for a monic polynomial over F_q (low-order-first coeffs)."""
    f = _ptrim(coeffs)
    m = len(f) - 1
    if m < 1 or f[-1] != 1:
        return False
    if m == 1:
        return True
    x = (0, 1)
    checkpoints = {m // p for p in _prime_factors(m)}
    t = x
    for k in range(1, m + 1):
        t = _ppowmod(t, q, f, q)  # t = x^(q^k) mod f
        if k in checkpoints:
            diff = _ptrim([(a - b) % q for a, b in
                           zip(list(t) + [0] * m, list(x) + [0] * m)])
            if len(_pgcd(diff, f, q)) - 1 > 0:
                return False
    return t == x


def default_modulus(q: int, m: int) -> tuple[int, ...]:
    """Least monic irreducible of degree m over F_q, by base-q encoding.

    The scan order (constant term least significant) is fixed so that every
    run and every consumer agrees on the same field presentation.
    """
    for enc in range(q**m):
        coeffs = []
        e = enc
        for _ in range(m):
            coeffs.append(e % q)
            e //= q
        coeffs.append(1)
        if is_irreducible(coeffs, q):
            return tuple(coeffs)
    raise AssertionError("no irreducible polynomial found")  # unreachable


class Field:
    """The finite field F_{q^m} for prime q, presented as F_q[x]/(modulus)."""

    __slots__ = ("q", "m", "order", "modulus", "_exp", "_log", "_powers_of_q",
                 "_poly_basis")

    def __init__(self, q: int, m: int, modulus: Sequence[int] | None = None):
        if not is_prime(q):
            raise ValueError(f"q must be prime, got {q}")
        if m < 1:
            raise ValueError(f"extension degree must be >= 1, got {m}")
        if modulus is None:
            modulus = default_modulus(q, m)
        else:
            modulus = tuple(c % q for c in modulus)
            if len(_ptrim(modulus)) - 1 != m or modulus[-1] != 1:
                raise ValueError("modulus must be monic of degree m")
            if not is_irreducible(modulus, q):
                raise ValueError("modulus is reducible over F_%d" % q)
        self.q = q
        self.m = m
        self.order = q**m
        self.modulus = modulus
        self._powers_of_q = tuple(q**i for i in range(m + 1))
        self._exp: list[int] | None = None
        self._log: list[int] | None = None
        self._poly_basis: Basis | None = None
        if self.order <= FIELD_TABLE_LIMIT:
            self._build_tables()

    # -- identity ----------------------------------------------------------

    @property
    def key(self):
        return (self.q, self.m, self.modulus)

    def __eq__(self, other):
        return isinstance(other, Field) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return f"Field(q={self.q}, m={self.m})"

    # -- element construction ----------------------------------------------

    def element(self, coords: Iterable[int]) -> "FieldElement":
        """Element with the given coordinates (length m, residues mod q)."""
        coords = list(coords)
        if len(coords) != self.m:
            raise ValueError(f"expected {self.m} coordinates, got {len(coords)}")
        idx = 0
        for i, c in enumerate(coords):
            idx += (c % self.q) * self._powers_of_q[i]
        return FieldElement(self, idx)

    def from_index(self, idx: int) -> "FieldElement":
        if not 0 <= idx < self.order:
            raise ValueError(f"index {idx} outside [0, {self.order})")
        return FieldElement(self, idx)

    def scalar(self, c: int) -> "FieldElement":
        """The base-field scalar c embedded as a constant."""
        return FieldElement(self, c % self.q)

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    @property
    def x(self) -> "FieldElement":
        """The residue of the indeterminate (a root of the modulus)."""
        if self.m == 1:
            return FieldElement(self, (-self.modulus[0]) % self.q)
        return FieldElement(self, self.q)

    def elements(self) -> Iterator["FieldElement"]:
        return (FieldElement(self, i) for i in range(self.order))

    def random_element(self, rng) -> "FieldElement":
        return FieldElement(self, rng.randrange(self.order))

    def polynomial_basis(self) -> "Basis":
        if self._poly_basis is None:
            self._poly_basis = Basis([FieldElement(self, self._powers_of_q[i])
                                      for i in range(self.m)])
        return self._poly_basis

    # -- index-level arithmetic (the workhorse layer) ------------------------

    def digits(self, idx: int) -> tuple[int, ...]:
        q = self.q
        out = []
        for _ in range(self.m):
            out.append(idx % q)
            idx //= q
        return tuple(out)

    def add_idx(self, a: int, b: int) -> int:
        q = self.q
        if q == 2:
            return a ^ b
        out = 0
        for i in range(self.m):
            p = self._powers_of_q[i]
            out += ((a // p + b // p) % q) * p
        return out

    def neg_idx(self, a: int) -> int:
        q = self.q
        if q == 2:
            return a
        out = 0
        for i in range(self.m):
            p = self._powers_of_q[i]
            out += ((-(a // p)) % q) * p
        return out

    def sub_idx(self, a: int, b: int) -> int:
        if self.q == 2:
            return a ^ b
        return self.add_idx(a, self.neg_idx(b))

    def mul_idx(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self._exp is not None:
            return self._exp[(self._log[a] + self._log[b]) % (self.order - 1)]
        return self._mul_poly(a, b)

    def inv_idx(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in " + repr(self))
        if self._exp is not None:
            return self._exp[(self.order - 1 - self._log[a]) % (self.order - 1)]
        return self.pow_idx(a, self.order - 2)

    def pow_idx(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow_idx(self.inv_idx(a), -e)
        if a == 0:
            return 1 if e == 0 else 0
        if self._exp is not None:
            return self._exp[self._log[a] * e % (self.order - 1)]
        result = 1
        while e:
            if e & 1:
                result = self._mul_poly(result, a)
            a = self._mul_poly(a, a)
            e >>= 1
        return result

    def frob_idx(self, a: int, i: int) -> int:
        """a^(q^i); the i-fold Frobenius, an F_q-linear field automorphism."""
        if i < 0:
            raise ValueError("Frobenius exponent index must be >= 0")
        if a == 0:
            return 0
        return self.pow_idx(a, pow(self.q, i % self.m, self.order - 1)
                            if self.order > 2 else 1)

    # -- internals -----------------------------------------------------------

    def _mul_poly(self, a: int, b: int) -> int:
        da = self.digits(a)
        db = self.digits(b)
        prod = _pmulmod(_ptrim(da), _ptrim(db), self.modulus, self.q)
        idx = 0
        for i, c in enumerate(prod):
            idx += c * self._powers_of_q[i]
        return idx

    def _build_tables(self):
        order = self.order
        if order == 2:
            self._exp = [1]
            self._log = [0, 0]
            return
        factors = _prime_factors(order - 1)
        gen = None
        for cand in range(2, order):
            if all(self.pow_idx(cand, (order - 1) // p) != 1 for p in factors):
                gen = cand
                break
        assert gen is not None, "multiplicative group has a generator"
        exp = [0] * (order - 1)
        log = [0] * order
        cur = 1
        for i in range(order - 1):
            exp[i] = cur
            log[cur] = i
            cur = self._mul_poly(cur, gen)
        self._exp = exp
        self._log = log


class FieldElement:
    """An element of a Field; immutable, hashable, operator-equipped."""

    __slots__ = ("field", "idx")

    def __init__(self, field: Field, idx: int):
        self.field = field
        self.idx = idx

    @property
    def coords(self) -> tuple[int, ...]:
        """Coordinates over F_q in the polynomial basis, low order first."""
        return self.field.digits(self.idx)

    def _same_field(self, other: "FieldElement") -> None:
        if self.field.key != other.field.key:
            raise ValueError("elements belong to different fields")

    def __add__(self, other):
        if not isinstance(other, FieldElement):
            return NotImplemented
        self._same_field(other)
        return FieldElement(self.field, self.field.add_idx(self.idx, other.idx))

    def __sub__(self, other):
        if not isinstance(other, FieldElement):
            return NotImplemented
        self._same_field(other)
        return FieldElement(self.field, self.field.sub_idx(self.idx, other.idx))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg_idx(self.idx))

    def __mul__(self, other):
        if not isinstance(other, FieldElement):
            return NotImplemented
        self._same_field(other)
        return FieldElement(self.field, self.field.mul_idx(self.idx, other.idx))

    def __truediv__(self, other):
        if not isinstance(other, FieldElement):
            return NotImplemented
        self._same_field(other)
        return FieldElement(self.field,
                            self.field.mul_idx(self.idx, self.field.inv_idx(other.idx)))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow_idx(self.idx, e))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv_idx(self.idx))

    def frobenius(self, i: int) -> "FieldElement":
        """Raise to the q^i-th power."""
        return FieldElement(self.field, self.field.frob_idx(self.idx, i))

    def __bool__(self):
        return self.idx != 0

    def __eq__(self, other):
        return (isinstance(other, FieldElement)
                and self.field.key == other.field.key and self.idx == other.idx)

    def __hash__(self):
        return hash((self.field.key, self.idx))

    def __repr__(self):
        return f"GF({self.field.q}^{self.field.m})[{self.idx}]"


class Basis:
    """An F_q-basis of F_{q^m}, with the change matrix into its coordinates.

    ``change_matrix`` converts polynomial-basis coordinates to coordinates in
    this basis; it is the inverse of the matrix whose columns are the basis
    elements' polynomial coordinates.
    """

    __slots__ = ("field", "elements", "change_matrix", "_is_polynomial")

    def __init__(self, elements: Sequence[FieldElement]):
        from . import linalg  # deferred: linalg is a leaf module

        if not elements:
            raise ValueError("empty basis")
        field = elements[0].field
        if len(elements) != field.m:
            raise ValueError(f"basis of F_{{{field.q}^{field.m}}} needs "
                             f"{field.m} elements, got {len(elements)}")
        for e in elements:
            if e.field.key != field.key:
                raise ValueError("basis elements belong to different fields")
        cols = [e.coords for e in elements]
        mat = [[cols[j][i] for j in range(field.m)] for i in range(field.m)]
        try:
            inv = linalg.invert(mat, field.q)
        except ValueError:
            raise ValueError("basis elements are linearly dependent over F_q")
        self.field = field
        self.elements = tuple(elements)
        self.change_matrix = tuple(tuple(row) for row in inv)
        self._is_polynomial = all(
            elements[i].idx == field._powers_of_q[i] for i in range(field.m))

    def coordinates(self, a: FieldElement) -> tuple[int, ...]:
        """Coordinates of a in this basis (inverse of ``combine``)."""
        if a.field.key != self.field.key:
            raise ValueError("element belongs to a different field")
        poly = a.coords
        if self._is_polynomial:
            return poly
        q = self.field.q
        return tuple(sum(r * c for r, c in zip(row, poly)) % q
                     for row in self.change_matrix)

    def combine(self, coords: Sequence[int]) -> FieldElement:
        """The element with the given coordinates in this basis."""
        f = self.field
        if len(coords) != f.m:
            raise ValueError(f"expected {f.m} coordinates, got {len(coords)}")
        idx = 0
        for c, beta in zip(coords, self.elements):
            idx = f.add_idx(idx, f.mul_idx(c % f.q, beta.idx))
        return FieldElement(f, idx)

    def __repr__(self):
        return f"Basis({list(self.elements)!r})"


@functools.lru_cache(maxsize=None)
def default_field(q: int, m: int) -> Field:
    """The field F_{q^m} with the default (least) modulus, cached."""
    return Field(q, m)
