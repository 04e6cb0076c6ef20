"""The rank metric on F_{q^m}^n.

A length-n vector over F_{q^m} expands to an m x n matrix over F_q by
writing each entry's coordinates (in a chosen basis) into a column.  The
rank norm of the vector is the F_q-rank of that matrix, and the rank
distance between two vectors is the norm of their difference.

Transposing the expansion matrix gives the rank-preserving bijection from
F_{q^m}^n onto F_{q^n}^m that lets every statement assume n <= m.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

from . import linalg
from .field import Basis, Field, FieldElement, default_field
from .limits import SPAN_ENUMERATION_LIMIT, GuardExceeded


class RankVector:
    """A vector over F_{q^m} together with the basis used to expand it.

    Vectors compare equal by field and entries; the basis is presentation
    metadata for the matrix view (the rank itself is basis-independent).
    """

    __slots__ = ("entries", "basis")

    def __init__(self, entries: Sequence[FieldElement], basis: Basis | None = None):
        entries = tuple(entries)
        if not entries:
            raise ValueError("rank vectors have length >= 1")
        field = entries[0].field
        for e in entries:
            if e.field.key != field.key:
                raise ValueError("vector entries belong to different fields")
        if basis is None:
            basis = field.polynomial_basis()
        elif basis.field.key != field.key:
            raise ValueError("basis field does not match entry field")
        self.entries = entries
        self.basis = basis

    # -- construction helpers ------------------------------------------------

    @classmethod
    def zero(cls, field: Field, n: int, basis: Basis | None = None) -> "RankVector":
        return cls([field.zero] * n, basis)

    @classmethod
    def from_indices(cls, field: Field, ids: Sequence[int],
                     basis: Basis | None = None) -> "RankVector":
        return cls([field.from_index(i) for i in ids], basis)

    @classmethod
    def random(cls, field: Field, n: int, rng,
               basis: Basis | None = None) -> "RankVector":
        return cls([field.random_element(rng) for _ in range(n)], basis)

    # -- vector space structure over F_{q^m} ----------------------------------

    @property
    def field(self) -> Field:
        return self.entries[0].field

    @property
    def ids(self) -> tuple[int, ...]:
        return tuple(e.idx for e in self.entries)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def _compatible(self, other: "RankVector") -> None:
        if not isinstance(other, RankVector):
            raise TypeError(f"expected RankVector, got {type(other).__name__}")
        if other.field.key != self.field.key or len(other) != len(self):
            raise ValueError("vectors live in different spaces")

    def __add__(self, other):
        self._compatible(other)
        return RankVector([a + b for a, b in zip(self.entries, other.entries)],
                          self.basis)

    def __sub__(self, other):
        self._compatible(other)
        return RankVector([a - b for a, b in zip(self.entries, other.entries)],
                          self.basis)

    def __neg__(self):
        return RankVector([-a for a in self.entries], self.basis)

    def __mul__(self, scalar: FieldElement):
        if not isinstance(scalar, FieldElement):
            return NotImplemented
        return RankVector([e * scalar for e in self.entries], self.basis)

    __rmul__ = __mul__

    def __bool__(self):
        return any(self.entries)

    def __eq__(self, other):
        return (isinstance(other, RankVector)
                and self.field.key == other.field.key
                and self.ids == other.ids)

    def __hash__(self):
        return hash((self.field.key, self.ids))

    def __repr__(self):
        return f"RankVector({list(self.entries)!r})"


def to_matrix(v: RankVector) -> tuple[tuple[int, ...], ...]:
    """m x n expansion of v over F_q; column j holds the coordinates of v_j."""
    cols = [v.basis.coordinates(e) for e in v.entries]
    m = v.field.m
    return tuple(tuple(col[i] for col in cols) for i in range(m))


def vector_from_matrix(mat: Sequence[Sequence[int]], basis: Basis) -> RankVector:
    """Inverse of ``to_matrix``: rebuild the vector whose expansion is mat."""
    m = basis.field.m
    if len(mat) != m:
        raise ValueError(f"expected {m} rows, got {len(mat)}")
    n = len(mat[0])
    entries = [basis.combine([mat[i][j] for i in range(m)]) for j in range(n)]
    return RankVector(entries, basis)


def rank(v: RankVector) -> int:
    """Rank norm: the F_q-rank of the expansion matrix of v."""
    field = v.field
    if v.basis._is_polynomial:
        return _rank_idx(v.ids, field)
    cols = [v.basis.coordinates(e) for e in v.entries]
    return linalg.rank(cols, field.q)


def _rank_idx(ids: Sequence[int], field: Field) -> int:
    # Polynomial-basis fast path: an element index is its coordinate column.
    if field.q == 2:
        return linalg.gf2_rank(ids)
    return linalg.rank([field.digits(i) for i in ids], field.q)


def rank_distance(x: RankVector, y: RankVector) -> int:
    """Rank of x - y; the distance induced by the rank norm."""
    x._compatible(y)
    f = x.field
    return _rank_idx([f.sub_idx(a, b) for a, b in zip(x.ids, y.ids)], f)


def transpose_vector(x: RankVector, target_basis: Basis | None = None) -> RankVector:
    """The image of x under the rank-preserving swap of the m and n roles.

    The expansion matrix of the result (an m-vector over F_{q^n}) is the
    transpose of the expansion matrix of x.  The target basis defaults to the
    polynomial basis of the default F_{q^n}.
    """
    f = x.field
    n = len(x)
    if target_basis is None:
        target_basis = default_field(f.q, n).polynomial_basis()
    tf = target_basis.field
    if tf.q != f.q or tf.m != n:
        raise ValueError(f"target basis must span F_{{{f.q}^{n}}}, "
                         f"got F_{{{tf.q}^{tf.m}}}")
    mat = to_matrix(x)
    entries = [target_basis.combine(row) for row in mat]
    return RankVector(entries, target_basis)


def transpose_code(codewords: Iterable[RankVector],
                   target_basis: Basis | None = None) -> Iterator[RankVector]:
    """Element-wise transposition of a code, materialized lazily.

    The image of an (n, M, d) code is an (m, M, d) code over F_{q^n}; only
    one transposed word is held at a time.
    """
    for w in codewords:
        yield transpose_vector(w, target_basis)


def _flat_digits(ids: Sequence[int], field: Field) -> tuple[int, ...]:
    # The vector as one q-ary coordinate string of length m*n.
    out: list[int] = []
    for i in ids:
        out.extend(field.digits(i))
    return tuple(out)


def independent_subset(vectors: Iterable[RankVector]) -> list[RankVector]:
    """A maximal F_q-independent subset, in input order."""
    vecs = list(vectors)
    if not vecs:
        return []
    field = vecs[0].field
    elim = linalg.Eliminator(field.q)
    return [v for v in vecs if elim.add(_flat_digits(v.ids, field))]


def _iter_span_idx(gen_ids: Sequence[Sequence[int]], field: Field) -> Iterator[tuple[int, ...]]:
    # Walk the F_q-span of independent generators with one odometer step per
    # element: resetting a digit q-1 -> 0 is the same vector add as +1 mod q.
    q = field.q
    k = len(gen_ids)
    n = len(gen_ids[0])
    cur = [0] * n
    yield tuple(cur)
    digits = [0] * k
    add = field.add_idx
    for _ in range(q**k - 1):
        i = 0
        while digits[i] == q - 1:
            digits[i] = 0
            g = gen_ids[i]
            for j in range(n):
                cur[j] = add(cur[j], g[j])
            i += 1
        digits[i] += 1
        g = gen_ids[i]
        for j in range(n):
            cur[j] = add(cur[j], g[j])
        yield tuple(cur)


def enumerate_span(generators: Sequence[RankVector]) -> Iterator[RankVector]:
    """All q^K vectors of the F_q-span of the generators (dependents dropped)."""
    gens = independent_subset(generators)
    if not gens:
        raise ValueError("span of an empty or all-zero generating set")
    field = gens[0].field
    if field.q ** len(gens) > SPAN_ENUMERATION_LIMIT:
        raise GuardExceeded(
            f"span has {field.q}^{len(gens)} elements; guard is "
            f"{SPAN_ENUMERATION_LIMIT}")
    basis = generators[0].basis
    for ids in _iter_span_idx([g.ids for g in gens], field):
        yield RankVector.from_indices(field, ids, basis)


def min_rank_distance(codewords: Sequence[RankVector], linear: bool = False) -> int:
    """Minimum rank distance of an explicit code.

    Non-linear case: minimum of rank(x - y) over distinct pairs.  Linear
    case: the input is any F_q-generating set (a basis or the full code);
    its span is enumerated and the minimum rank over nonzero vectors
    returned.
    """
    words = list(codewords)
    if not words:
        raise ValueError("empty code")
    field = words[0].field
    for w in words:
        w._compatible(words[0])
    if linear:
        gens = independent_subset(words)
        if not gens:
            raise ValueError("all-zero generating set has no minimum distance")
        if field.q ** len(gens) > SPAN_ENUMERATION_LIMIT:
            raise GuardExceeded(
                f"span has {field.q}^{len(gens)} elements; guard is "
                f"{SPAN_ENUMERATION_LIMIT}")
        best = None
        for ids in _iter_span_idx([g.ids for g in gens], field):
            if any(ids):
                r = _rank_idx(ids, field)
                if best is None or r < best:
                    best = r
                    if best == 1:
                        break
        return best
    distinct = list(dict.fromkeys(words))
    if len(distinct) < 2:
        raise ValueError("need at least two distinct codewords")
    sub = field.sub_idx
    best = None
    for i, x in enumerate(distinct):
        xi = x.ids
        for y in distinct[i + 1:]:
            d = _rank_idx([sub(a, b) for a, b in zip(xi, y.ids)], field)
            if best is None or d < best:
                best = d
                if best == 1:
                    return 1
    return best
