"""Dense exact matrices over a tagged division ring, plus the embeddings.

Matrices are immutable values; all operations are pure and exact.  Over H
the entries do not commute, so products and eliminations keep strict
left/right order (row operations always act by left multiplication).

The two embeddings provided here are

* :func:`realify` -- expand each complex entry z into the 2x2 real block
  [[Re z, Im z], [-Im z, Re z]], doubling the size (M(n,C) -> M(2n,R));
* :func:`complex_adjoint` -- write a quaternionic matrix as A1 + A2 j with
  complex A1, A2 and return [[A1, A2], [-conj(A2), conj(A1)]]
  (M(n,H) -> M(2n,C)).

Both are unital ring homomorphisms, which the test suite checks exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from ._backend import kernel as _k
from .errors import (
    DomainMismatchError,
    ParseError,
    ShapeMismatchError,
    SingularMatrixError,
)
from .scalars import Quaternion, ScalarDomain, format_scalar, parse_scalar

_QZERO = _k.QZERO
_QONE = _k.QONE


def _check_entry(raw, domain: ScalarDomain):
    if domain is ScalarDomain.H:
        return
    if raw[3] != 0 or raw[2] != 0:
        raise DomainMismatchError(
            f"entry {format_scalar(Quaternion._wrap(raw))} is not allowed in domain "
            f"{domain.value}")
    if domain is ScalarDomain.R and raw[1] != 0:
        raise DomainMismatchError(
            f"entry {format_scalar(Quaternion._wrap(raw))} is not real")


class Matrix:
    """An immutable rows x cols matrix of exact scalars over R, C or H."""

    __slots__ = ("_domain", "_rows", "_cols", "_raw")

    def __init__(self, domain: ScalarDomain, rows: int, cols: int, entries):
        domain = ScalarDomain(domain)
        raw = []
        for e in entries:
            if isinstance(e, Quaternion):
                r = e.raw
            elif isinstance(e, (int, Fraction)):
                r = Quaternion(e).raw
            elif isinstance(e, str):
                r = parse_scalar(e).raw
            else:
                raise TypeError(f"cannot use {type(e).__name__} as a matrix entry")
            _check_entry(r, domain)
            raw.append(r)
        if rows <= 0 or cols <= 0 or len(raw) != rows * cols:
            raise ShapeMismatchError(
                f"expected {rows}x{cols} = {rows * cols} entries, got {len(raw)}")
        self._domain = domain
        self._rows = rows
        self._cols = cols
        self._raw = tuple(raw)

    @classmethod
    def _wrap(cls, domain, rows, cols, raw):
        # trusted constructor: kernel results stay inside their domain
        m = object.__new__(cls)
        m._domain = domain
        m._rows = rows
        m._cols = cols
        m._raw = tuple(raw)
        return m

    @classmethod
    def identity(cls, domain, n: int) -> "Matrix":
        raw = [_QZERO] * (n * n)
        for i in range(n):
            raw[i * n + i] = _QONE
        return cls._wrap(ScalarDomain(domain), n, n, raw)

    @classmethod
    def zero(cls, domain, rows: int, cols: int) -> "Matrix":
        return cls._wrap(ScalarDomain(domain), rows, cols, [_QZERO] * (rows * cols))

    @classmethod
    def from_rows(cls, domain, rows) -> "Matrix":
        rows = [list(r) for r in rows]
        if not rows or any(len(r) != len(rows[0]) for r in rows):
            raise ShapeMismatchError("rows must be non-empty and rectangular")
        flat = [e for r in rows for e in r]
        return cls(domain, len(rows), len(rows[0]), flat)

    @classmethod
    def diagonal(cls, domain, scalars) -> "Matrix":
        scalars = list(scalars)
        n = len(scalars)
        m = cls(domain, 1, n, scalars)  # reuse entry validation
        raw = [_QZERO] * (n * n)
        for i in range(n):
            raw[i * n + i] = m._raw[i]
        return cls._wrap(m._domain, n, n, raw)

    @property
    def domain(self) -> ScalarDomain:
        return self._domain

    @property
    def rows(self) -> int:
        return self._rows

    @property
    def cols(self) -> int:
        return self._cols

    @property
    def raw(self):
        return self._raw

    def is_square(self) -> bool:
        return self._rows == self._cols

    def __getitem__(self, key):
        i, j = key
        if not (0 <= i < self._rows and 0 <= j < self._cols):
            raise IndexError(key)
        return Quaternion._wrap(self._raw[i * self._cols + j])

    def row(self, i: int):
        return tuple(Quaternion._wrap(r) for r in self._raw[i * self._cols:(i + 1) * self._cols])

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self._domain is other._domain and self._rows == other._rows
                and self._cols == other._cols and self._raw == other._raw)

    def __hash__(self):
        return hash((self._domain, self._rows, self._cols, self._raw))

    def __neg__(self):
        return Matrix._wrap(self._domain, self._rows, self._cols,
                            [_k.qneg(e) for e in self._raw])

    def _binop_check(self, other):
        if self._domain is not other._domain:
            raise DomainMismatchError(
                f"domains differ: {self._domain.value} vs {other._domain.value}")

    def __add__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        self._binop_check(other)
        if (self._rows, self._cols) != (other._rows, other._cols):
            raise ShapeMismatchError("shapes differ for addition")
        return Matrix._wrap(self._domain, self._rows, self._cols,
                            [_k.qadd(x, y) for x, y in zip(self._raw, other._raw)])

    def __sub__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        self._binop_check(other)
        if (self._rows, self._cols) != (other._rows, other._cols):
            raise ShapeMismatchError("shapes differ for subtraction")
        return Matrix._wrap(self._domain, self._rows, self._cols,
                            [_k.qsub(x, y) for x, y in zip(self._raw, other._raw)])

    def __mul__(self, other):
        if isinstance(other, Matrix):
            return mat_mul(self, other)
        if isinstance(other, (int, Fraction, Quaternion)):
            r = Quaternion(other).raw if not isinstance(other, Quaternion) else other.raw
            _check_entry(r, self._domain)
            return Matrix._wrap(self._domain, self._rows, self._cols,
                                [_k.qmul(e, r) for e in self._raw])
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, Quaternion)):
            r = Quaternion(other).raw if not isinstance(other, Quaternion) else other.raw
            _check_entry(r, self._domain)
            return Matrix._wrap(self._domain, self._rows, self._cols,
                                [_k.qmul(r, e) for e in self._raw])
        return NotImplemented

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            return mat_mul(self, other)
        return NotImplemented

    def inverse(self) -> "Matrix":
        return mat_inverse(self)

    def conjugate_entries(self) -> "Matrix":
        return Matrix._wrap(self._domain, self._rows, self._cols,
                            [_k.qconj(e) for e in self._raw])

    def retag(self, domain) -> "Matrix":
        """Same entries under another domain tag (must still satisfy it)."""
        return Matrix(domain, self._rows, self._cols,
                      [Quaternion._wrap(e) for e in self._raw])

    def to_json_dict(self) -> dict:
        rows = []
        for i in range(self._rows):
            rows.append([format_scalar(Quaternion._wrap(e))
                         for e in self._raw[i * self._cols:(i + 1) * self._cols]])
        return {"domain": self._domain.value, "rows": self._rows,
                "cols": self._cols, "entries": rows}

    @classmethod
    def from_json_dict(cls, doc) -> "Matrix":
        try:
            domain = ScalarDomain(doc["domain"])
            rows = doc["rows"]
            cols = doc["cols"]
            entries = doc["entries"]
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"malformed matrix document: {exc}") from exc
        if not isinstance(rows, int) or not isinstance(cols, int):
            raise ParseError("matrix rows/cols must be integers")
        if (not isinstance(entries, list) or len(entries) != rows
                or any(not isinstance(r, list) or len(r) != cols for r in entries)):
            raise ParseError("matrix entries must be a rows x cols nested list")
        flat = [parse_scalar(e) if isinstance(e, str) else e
                for r in entries for e in r]
        return cls(domain, rows, cols, flat)

    def __repr__(self):
        body = "; ".join(
            ", ".join(format_scalar(Quaternion._wrap(e))
                      for e in self._raw[i * self._cols:(i + 1) * self._cols])
            for i in range(self._rows))
        return f"<Matrix {self._domain.value} {self._rows}x{self._cols} [{body}]>"


def mat_mul(A: Matrix, B: Matrix) -> Matrix:
    """Exact product; over H the index order of entry products is respected."""
    A._binop_check(B)
    if A.cols != B.rows:
        raise ShapeMismatchError(f"cannot multiply {A.rows}x{A.cols} by {B.rows}x{B.cols}")
    raw = _k.mat_mul(list(A.raw), list(B.raw), A.rows, A.cols, B.cols)
    return Matrix._wrap(A.domain, A.rows, B.cols, raw)


def mat_inverse(A: Matrix) -> Matrix:
    """Two-sided inverse via left-multiplication row reduction of [A | I]."""
    if not A.is_square():
        raise ShapeMismatchError("only square matrices have inverses")
    n = A.rows
    aug = []
    for i in range(n):
        aug.extend(A.raw[i * n:(i + 1) * n])
        aug.extend(_QONE if j == i else _QZERO for j in range(n))
    R, piv = _k.rref(aug, n, 2 * n)
    if piv != list(range(n)):
        raise SingularMatrixError(f"matrix of rank {len(piv)} is singular")
    out = []
    for i in range(n):
        out.extend(R[i * 2 * n + n:(i + 1) * 2 * n])
    return Matrix._wrap(A.domain, n, n, out)


def realify(A: Matrix) -> Matrix:
    """Expand complex entries to 2x2 real blocks (M(n,C) -> M(2n,R))."""
    if A.domain is not ScalarDomain.C:
        raise DomainMismatchError("realify takes a complex matrix")
    rows, cols = A.rows, A.cols
    out = [_QZERO] * (4 * rows * cols)
    w = 2 * cols
    for i in range(rows):
        for j in range(cols):
            a, b, _, _, den = A.raw[i * cols + j]
            re = _k.qnorm(a, 0, 0, 0, den)
            im = _k.qnorm(b, 0, 0, 0, den)
            nim = _k.qneg(im)
            out[(2 * i) * w + 2 * j] = re
            out[(2 * i) * w + 2 * j + 1] = im
            out[(2 * i + 1) * w + 2 * j] = nim
            out[(2 * i + 1) * w + 2 * j + 1] = re
    return Matrix._wrap(ScalarDomain.R, 2 * rows, 2 * cols, out)


def complex_adjoint(A: Matrix) -> Matrix:
    """The complex adjoint of a quaternionic matrix (M(n,H) -> M(2n,C)).

    Writing A = A1 + A2 j with complex A1, A2, returns the block matrix
    [[A1, A2], [-conj(A2), conj(A1)]]; multiplicative and unital.
    """
    if A.domain is not ScalarDomain.H:
        raise DomainMismatchError("complex_adjoint takes a quaternionic matrix")
    rows, cols = A.rows, A.cols
    out = [_QZERO] * (4 * rows * cols)
    w = 2 * cols
    for i in range(rows):
        for j in range(cols):
            a, b, c, d, den = A.raw[i * cols + j]
            a1 = _k.qnorm(a, b, 0, 0, den)
            a2 = _k.qnorm(c, d, 0, 0, den)
            out[i * w + j] = a1
            out[i * w + cols + j] = a2
            out[(rows + i) * w + j] = _k.qneg(_k.qconj(a2))
            out[(rows + i) * w + cols + j] = _k.qconj(a1)
    return Matrix._wrap(ScalarDomain.C, 2 * rows, 2 * cols, out)


def cayley(X: Matrix) -> Matrix:
    """The Cayley transform (I + X)(I - X)^{-1}.

    Exact stand-in for the matrix exponential in reverser constructions:
    g X g^{-1} = -X forces g cayley(X) g^{-1} = cayley(X)^{-1}, and
    cayley(-X) = cayley(X)^{-1}.  Defined whenever 1 is not an eigenvalue.
    """
    if not X.is_square():
        raise ShapeMismatchError("cayley needs a square matrix")
    eye = Matrix.identity(X.domain, X.rows)
    try:
        inv = mat_inverse(eye - X)
    except SingularMatrixError as exc:
        raise SingularMatrixError("cayley undefined: 1 is an eigenvalue") from exc
    return mat_mul(eye + X, inv)


def block_compose(blocks, layout: str = "diagonal") -> Matrix:
    """Assemble square blocks diagonally, or two equal blocks antidiagonally."""
    blocks = list(blocks)
    if not blocks:
        raise ShapeMismatchError("no blocks to compose")
    domain = blocks[0].domain
    for blk in blocks:
        if blk.domain is not domain:
            raise DomainMismatchError("blocks live in different domains")
        if not blk.is_square():
            raise ShapeMismatchError("blocks must be square")
    if layout == "diagonal":
        n = sum(b.rows for b in blocks)
        out = [_QZERO] * (n * n)
        off = 0
        for blk in blocks:
            m = blk.rows
            for i in range(m):
                out[(off + i) * n + off:(off + i) * n + off + m] = \
                    blk.raw[i * m:(i + 1) * m]
            off += m
        return Matrix._wrap(domain, n, n, out)
    if layout == "antidiagonal":
        if len(blocks) != 2 or blocks[0].rows != blocks[1].rows:
            raise ShapeMismatchError("antidiagonal layout needs two equal-size blocks")
        m = blocks[0].rows
        n = 2 * m
        out = [_QZERO] * (n * n)
        for i in range(m):
            out[i * n + m:(i * n) + 2 * m] = blocks[0].raw[i * m:(i + 1) * m]
            out[(m + i) * n:(m + i) * n + m] = blocks[1].raw[i * m:(i + 1) * m]
        return Matrix._wrap(domain, n, n, out)
    raise ValueError(f"unknown layout {layout!r}")


@dataclass(frozen=True)
class Permutation:
    """A bijection of 0..n-1; image[t] is where index t goes."""

    image: tuple

    def __post_init__(self):
        n = len(self.image)
        if sorted(self.image) != list(range(n)):
            raise ShapeMismatchError(f"not a permutation of 0..{n - 1}: {self.image}")

    def __len__(self):
        return len(self.image)

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.image)
        for t, v in enumerate(self.image):
            inv[v] = t
        return Permutation(tuple(inv))

    def matrix(self, domain) -> Matrix:
        n = len(self.image)
        raw = [_QZERO] * (n * n)
        for t, v in enumerate(self.image):
            raw[v * n + t] = _QONE
        return Matrix._wrap(ScalarDomain(domain), n, n, raw)


def block_permutation(sizes, new_order) -> Permutation:
    """Index-level permutation that reorders diagonal blocks of given sizes.

    ``new_order[t]`` is the old block placed at new slot t.
    """
    sizes = list(sizes)
    if sorted(new_order) != list(range(len(sizes))):
        raise ShapeMismatchError("new_order must list every block exactly once")
    old_off = [0] * len(sizes)
    acc = 0
    for b, s in enumerate(sizes):
        old_off[b] = acc
        acc += s
    image = [0] * acc
    new_acc = 0
    for b_old in new_order:
        for t in range(sizes[b_old]):
            image[old_off[b_old] + t] = new_acc + t
        new_acc += sizes[b_old]
    return Permutation(tuple(image))


def permute_conjugate(A: Matrix, perm: Permutation) -> Matrix:
    """P A P^{-1} for the permutation matrix P sending e_t to e_{image[t]}."""
    if not A.is_square() or len(perm) != A.rows:
        raise ShapeMismatchError("permutation length must match matrix size")
    n = A.rows
    img = perm.image
    out = [_QZERO] * (n * n)
    for i in range(n):
        for j in range(n):
            out[img[i] * n + img[j]] = A.raw[i * n + j]
    return Matrix._wrap(A.domain, n, n, out)


def exp_nilpotent(X: Matrix) -> Matrix:
    """exp(X) as the finite sum sum_k X^k / k! for nilpotent X.

    Raises ValueError if X^n != 0 (the exactness contract forbids the
    transcendental exponential of anything else).
    """
    if not X.is_square():
        raise ShapeMismatchError("exp needs a square matrix")
    n = X.rows
    out = Matrix.identity(X.domain, n)
    power = Matrix.identity(X.domain, n)
    for k in range(1, n + 1):
        power = mat_mul(power, X)
        if all(e == _QZERO for e in power.raw):
            return out
        out = out + power * Fraction(1, factorial(k))
    raise ValueError("matrix is not nilpotent")
