"""Canonical forms: characteristic polynomials, Q(i) roots, Jordan data.

The Jordan decomposition is computed exactly over all three domains:

* C -- characteristic polynomial by evaluation/interpolation, Gaussian
  rational roots by divisor enumeration, chains by kernel completion;
* R -- complex machinery plus folding of conjugate eigenvalue pairs into
  real 2x2-block Jordan forms (stored with positive imaginary part);
* H -- eigenvalue structure read off the complex adjoint.  Chains for real
  eigenvalue classes are built directly over H (A - lam I is H-linear when
  lam is real); chains for classes with Im > 0 are chains of the adjoint
  mapped back through (z1, z2) -> z1 - conj(z2) j.

Every decomposition is verified by the exact round trip
S A S^{-1} == assemble(spec) before it is returned.

Invariant factors (the similarity oracle for commutative domains) come
from an exact Smith normal form over the polynomial ring Q(i)[x].
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from . import _gaussian as _g
from ._backend import kernel as _k
from .errors import (
    DomainMismatchError,
    NonSplittingSpectrumError,
    NotSimilarError,
    ParseError,
    ShapeMismatchError,
)
from .matrices import Matrix, block_compose, complex_adjoint, mat_inverse, mat_mul, realify
from .scalars import Quaternion, ScalarDomain, format_scalar, parse_scalar

_QZERO = _k.QZERO
_QONE = _k.QONE


# ---------------------------------------------------------------------------
# dense polynomials over Q(i), coefficients as raw scalar tuples (low first)

def _ptrim(c):
    n = len(c)
    while n and c[n - 1] == _QZERO:
        n -= 1
    return tuple(c[:n])


def _pdeg(f):
    return len(f) - 1


def _padd(f, g):
    if len(f) < len(g):
        f, g = g, f
    out = list(f)
    for t, e in enumerate(g):
        out[t] = _k.qadd(out[t], e)
    return _ptrim(out)


def _psub(f, g):
    out = list(f) + [_QZERO] * (len(g) - len(f))
    for t, e in enumerate(g):
        out[t] = _k.qsub(out[t], e)
    return _ptrim(out)


def _pmul(f, g):
    if not f or not g:
        return ()
    out = [_QZERO] * (len(f) + len(g) - 1)
    for s, x in enumerate(f):
        if x == _QZERO:
            continue
        for t, y in enumerate(g):
            if y == _QZERO:
                continue
            out[s + t] = _k.qadd(out[s + t], _k.qmul(x, y))
    return _ptrim(out)


def _pscale(f, c):
    if c == _QZERO:
        return ()
    return _ptrim([_k.qmul(e, c) for e in f])


def _pdivmod(f, g):
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    if len(f) < len(g):
        return (), f
    ginv = _k.qinv(g[-1])
    q = [_QZERO] * (len(f) - len(g) + 1)
    r = list(f)
    for k in range(len(f) - len(g), -1, -1):
        c = r[k + len(g) - 1]
        if c == _QZERO:
            continue
        c = _k.qmul(c, ginv)
        q[k] = c
        r[k + len(g) - 1] = _QZERO
        for t in range(len(g) - 1):
            r[k + t] = _k.qsub(r[k + t], _k.qmul(c, g[t]))
    return _ptrim(q), _ptrim(r)


def _pmonic(f):
    if not f or f[-1] == _QONE:
        return f
    return _pscale(f, _k.qinv(f[-1]))


def _peval(f, x):
    acc = _QZERO
    for c in reversed(f):
        acc = _k.qadd(_k.qmul(acc, x), c)
    return acc


class PolynomialQi:
    """A dense polynomial with Gaussian-rational coefficients, low degree first."""

    __slots__ = ("_coeffs",)

    def __init__(self, coefficients=()):
        raw = []
        for c in coefficients:
            if isinstance(c, Quaternion):
                q = c
            elif isinstance(c, str):
                q = parse_scalar(c)
            else:
                q = Quaternion(c)
            if not q.is_complex():
                raise DomainMismatchError(f"polynomial coefficient {q} is not in Q(i)")
            raw.append(q.raw)
        self._coeffs = _ptrim(raw)

    @classmethod
    def _wrap(cls, raw):
        p = object.__new__(cls)
        p._coeffs = _ptrim(raw)
        return p

    @property
    def raw(self):
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self._coeffs) - 1

    def is_zero(self) -> bool:
        return not self._coeffs

    def is_monic(self) -> bool:
        return bool(self._coeffs) and self._coeffs[-1] == _QONE

    def coefficient(self, k: int) -> Quaternion:
        if 0 <= k < len(self._coeffs):
            return Quaternion._wrap(self._coeffs[k])
        return Quaternion(0)

    def coefficients(self):
        return tuple(Quaternion._wrap(c) for c in self._coeffs)

    def monic(self) -> "PolynomialQi":
        return PolynomialQi._wrap(_pmonic(self._coeffs))

    def evaluate(self, x) -> Quaternion:
        q = x if isinstance(x, Quaternion) else Quaternion(x)
        if not q.is_complex():
            raise DomainMismatchError("evaluation point must be in Q(i)")
        return Quaternion._wrap(_peval(self._coeffs, q.raw))

    def __add__(self, other):
        return PolynomialQi._wrap(_padd(self._coeffs, other._coeffs))

    def __sub__(self, other):
        return PolynomialQi._wrap(_psub(self._coeffs, other._coeffs))

    def __mul__(self, other):
        return PolynomialQi._wrap(_pmul(self._coeffs, other._coeffs))

    def __divmod__(self, other):
        q, r = _pdivmod(self._coeffs, other._coeffs)
        return PolynomialQi._wrap(q), PolynomialQi._wrap(r)

    def __eq__(self, other):
        if not isinstance(other, PolynomialQi):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(self._coeffs)

    def __str__(self):
        if not self._coeffs:
            return "0"
        parts = []
        for k in range(len(self._coeffs) - 1, -1, -1):
            c = self._coeffs[k]
            if c == _QZERO:
                continue
            s = format_scalar(Quaternion._wrap(c))
            if k == 0:
                term = s
            else:
                xs = "x" if k == 1 else f"x^{k}"
                if s == "1":
                    term = xs
                elif s == "-1":
                    term = f"-{xs}"
                elif "+" in s[1:] or "-" in s[1:]:
                    term = f"({s}){xs}"
                else:
                    term = f"{s}{xs}"
            if not parts:
                parts.append(term)
            elif term.startswith("-"):
                parts.append(f"- {term[1:]}")
            else:
                parts.append(f"+ {term}")
        return " ".join(parts)

    def __repr__(self):
        return f"<PolynomialQi {self}>"


# ---------------------------------------------------------------------------
# Jordan data types

@dataclass(frozen=True)
class JordanBlock:
    """One Jordan block: eigenvalue class representative and size.

    ``real_complex_pair`` marks the real 2x2-block form of a conjugate pair
    of complex eigenvalues of a real matrix; such a block occupies
    2 * size rows.
    """

    eigenvalue: Quaternion
    size: int
    real_complex_pair: bool = False

    def __post_init__(self):
        if not isinstance(self.eigenvalue, Quaternion):
            object.__setattr__(self, "eigenvalue", Quaternion(self.eigenvalue))
        if not self.eigenvalue.is_complex():
            raise DomainMismatchError(f"block eigenvalue {self.eigenvalue} must be complex")
        if self.size < 1:
            raise ShapeMismatchError("block size must be positive")

    @property
    def dimension(self) -> int:
        return 2 * self.size if self.real_complex_pair else self.size

    def sort_key(self):
        lam = self.eigenvalue
        return (lam.a, lam.b, -self.size)


class JordanSpec:
    """The canonical multiset of Jordan blocks of a matrix over R, C or H.

    Blocks are stored in a fixed total order (eigenvalue lexicographic by
    (real, imaginary), sizes descending within an eigenvalue), so two specs
    are equal as values iff the block multisets agree.
    """

    __slots__ = ("_domain", "_blocks")

    def __init__(self, domain, blocks):
        domain = ScalarDomain(domain)
        blocks = tuple(sorted(blocks, key=JordanBlock.sort_key))
        for b in blocks:
            im = b.eigenvalue.b
            if domain is ScalarDomain.R:
                if b.real_complex_pair:
                    if im <= 0:
                        raise DomainMismatchError(
                            "real complex-pair block needs positive imaginary part")
                elif im != 0:
                    raise DomainMismatchError(
                        f"real Jordan block needs a real eigenvalue, got {b.eigenvalue}")
            else:
                if b.real_complex_pair:
                    raise DomainMismatchError(
                        "complex-pair blocks only exist over R")
                if domain is ScalarDomain.H and im < 0:
                    raise DomainMismatchError(
                        "quaternionic class representative needs Im >= 0")
        self._domain = domain
        self._blocks = blocks

    @property
    def domain(self) -> ScalarDomain:
        return self._domain

    @property
    def blocks(self):
        return self._blocks

    @property
    def dimension(self) -> int:
        return sum(b.dimension for b in self._blocks)

    def __eq__(self, other):
        if not isinstance(other, JordanSpec):
            return NotImplemented
        return self._domain is other._domain and self._blocks == other._blocks

    def __hash__(self):
        return hash((self._domain, self._blocks))

    def __repr__(self):
        body = ", ".join(
            f"J({b.eigenvalue}, {b.size}{', pair' if b.real_complex_pair else ''})"
            for b in self._blocks)
        return f"<JordanSpec {self._domain.value} [{body}]>"

    def to_json_dict(self) -> dict:
        return {
            "domain": self._domain.value,
            "blocks": [
                {"eigenvalue": format_scalar(b.eigenvalue), "size": b.size,
                 "realComplexPair": b.real_complex_pair}
                for b in self._blocks
            ],
        }

    @classmethod
    def from_json_dict(cls, doc) -> "JordanSpec":
        try:
            domain = doc["domain"]
            blocks = [
                JordanBlock(parse_scalar(b["eigenvalue"]), b["size"],
                            bool(b.get("realComplexPair", False)))
                for b in doc["blocks"]
            ]
        except (KeyError, TypeError) as exc:
            raise ParseError(f"malformed spec document: {exc}") from exc
        return cls(domain, blocks)


@dataclass(frozen=True)
class Decomposition:
    """A Jordan spec together with a conjugator: S A S^{-1} = assemble(spec)."""

    spec: JordanSpec
    conjugator: Matrix


def build_block(block: JordanBlock, domain) -> Matrix:
    """The matrix of one Jordan block over the given domain."""
    domain = ScalarDomain(domain)
    lam = block.eigenvalue
    m = block.size
    raw = [_QZERO] * (m * m)
    for t in range(m):
        raw[t * m + t] = lam.raw
        if t + 1 < m:
            raw[t * m + t + 1] = _QONE
    if block.real_complex_pair:
        if domain is not ScalarDomain.R:
            raise DomainMismatchError("complex-pair blocks only exist over R")
        return realify(Matrix._wrap(ScalarDomain.C, m, m, raw))
    return Matrix(domain, m, m, [Quaternion._wrap(e) for e in raw])


def assemble(spec: JordanSpec) -> Matrix:
    """Block-diagonal matrix of the spec's blocks in canonical order."""
    return block_compose([build_block(b, spec.domain) for b in spec.blocks])


# ---------------------------------------------------------------------------
# characteristic polynomial

def _char_poly_raw(raw, n):
    """det(xI - A) for a commutative-entry flat matrix, by interpolation."""
    xs = []
    v = 0
    for t in range(n + 1):
        xs.append((v, 0, 0, 0, 1))
        v = -v + (1 if v <= 0 else 0)  # 0, 1, -1, 2, -2, ...
    ys = []
    for x in xs:
        m = list(raw)
        for i in range(n):
            for j in range(n):
                e = _k.qneg(m[i * n + j])
                if i == j:
                    e = _k.qadd(e, x)
                m[i * n + j] = e
        ys.append(_k.det_qi(m, n))
    # Newton divided differences, then expansion to the monomial basis
    c = list(ys)
    for k in range(1, n + 1):
        for i in range(n, k - 1, -1):
            c[i] = _k.qmul(_k.qsub(c[i], c[i - 1]), _k.qinv(_k.qsub(xs[i], xs[i - k])))
    poly = ()
    basis = (_QONE,)
    for k in range(n + 1):
        poly = _padd(poly, _pscale(basis, c[k]))
        basis = _pmul(basis, (_k.qneg(xs[k]), _QONE))
    if _pdeg(poly) != n or poly[-1] != _QONE:
        raise AssertionError("characteristic polynomial is not monic of full degree")
    return poly


def char_poly(A: Matrix) -> PolynomialQi:
    """Exact det(xI - A); commutative domains only (H goes through the adjoint)."""
    if A.domain is ScalarDomain.H:
        raise DomainMismatchError("char_poly needs a commutative domain; "
                                  "use complex_adjoint first")
    if not A.is_square():
        raise ShapeMismatchError("char_poly needs a square matrix")
    return PolynomialQi._wrap(_char_poly_raw(list(A.raw), A.rows))


# ---------------------------------------------------------------------------
# Gaussian-rational roots

@dataclass(frozen=True)
class RootReport:
    """Roots in Q(i) with multiplicities, plus the non-splitting remainder."""

    roots: tuple
    leftover: PolynomialQi

    def splits(self) -> bool:
        return self.leftover.degree <= 0


def gaussian_roots(p: PolynomialQi) -> RootReport:
    """All roots of p lying in Q(i), found exactly.

    Clears denominators, then enumerates candidate roots u/v from the
    Gaussian-prime divisors of the trailing and leading coefficients
    (the rational root theorem over the UFD Z[i]) and deflates by every
    root found.  The product of (x - root)^mult times the reported
    leftover reproduces p exactly.
    """
    if p.is_zero():
        raise ZeroDivisionError("the zero polynomial has no root multiset")
    cur = p.raw
    roots = []
    zeros = 0
    while len(cur) > 1 and cur[0] == _QZERO:
        cur = cur[1:]
        zeros += 1
    if zeros:
        roots.append((Quaternion(0), zeros))
    if len(cur) > 1:
        den = 1
        for (_, _, _, _, d) in cur:
            den = lcm(den, d)
        zi = [(a * (den // d), b * (den // d)) for (a, b, _, _, d) in cur]
        u_divs = _g.divisors(zi[0])
        v_divs = _g.divisors(zi[-1])
        seen = set()
        candidates = []
        for u in u_divs:
            for unit in _g.UNITS:
                uu = _g.gmul(u, unit)
                for v in v_divs:
                    vn = _g.gnorm(v)
                    num = _g.gmul(uu, _g.gconj(v))
                    cand = _k.qnorm(num[0], num[1], 0, 0, vn)
                    if cand not in seen:
                        seen.add(cand)
                        candidates.append(cand)
        for cand in candidates:
            mult = 0
            while len(cur) > 1 and _peval(cur, cand) == _QZERO:
                q, r = _pdivmod(cur, (_k.qneg(cand), _QONE))
                if r:
                    raise AssertionError("deflation by a verified root left a remainder")
                cur = q
                mult += 1
            if mult:
                roots.append((Quaternion._wrap(cand), mult))
    roots.sort(key=lambda rm: (rm[0].a, rm[0].b))
    return RootReport(tuple(roots), PolynomialQi._wrap(cur))


# ---------------------------------------------------------------------------
# kernels, span tracking and Jordan chains over a division ring

def _nullspace(raw, nrows, ncols):
    """Basis of the right null space {x : M x = 0} as raw column vectors."""
    R, piv = _k.rref(list(raw), nrows, ncols)
    pivset = set(piv)
    basis = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = [_QZERO] * ncols
        v[f] = _QONE
        for r, pcol in enumerate(piv):
            e = R[r * ncols + f]
            if e != _QZERO:
                v[pcol] = _k.qneg(e)
        basis.append(v)
    return basis


class _SpanTracker:
    """Incremental independence test for column vectors (right module).

    Stored rows are kept fully reduced: each has 1 at its pivot and 0 at
    every other row's pivot, so reduction order does not matter.
    """

    __slots__ = ("n", "rows")

    def __init__(self, n):
        self.n = n
        self.rows = []

    def clone(self):
        t = _SpanTracker(self.n)
        t.rows = [(p, list(v)) for p, v in self.rows]
        return t

    def add(self, vec) -> bool:
        v = list(vec)
        for p, r in self.rows:
            f = v[p]
            if f != _QZERO:
                for t in range(self.n):
                    rt = r[t]
                    if rt != _QZERO:
                        v[t] = _k.qsub(v[t], _k.qmul(rt, f))
        pv = -1
        for t in range(self.n):
            if v[t] != _QZERO:
                pv = t
                break
        if pv < 0:
            return False
        inv = _k.qinv(v[pv])
        v = [_k.qmul(e, inv) if e != _QZERO else e for e in v]
        for p, r in self.rows:
            f = r[pv]
            if f != _QZERO:
                for t in range(self.n):
                    vt = v[t]
                    if vt != _QZERO:
                        r[t] = _k.qsub(r[t], _k.qmul(vt, f))
        self.rows.append((pv, v))
        self.rows.sort(key=lambda pr: pr[0])
        return True


def _matvec(raw, v, n):
    return _k.mat_mul(raw, v, n, n, 1)


def _jordan_chains(raw, n, lam, mult):
    """Jordan chains (bottom-first column vectors) for one eigenvalue.

    Valid whenever (A - lam I) is linear over the entry ring, i.e. lam
    commutes with the entries: any lam over R/C, or a real lam over H.
    Chains come out longest first; their total length is ``mult``.
    """
    N = list(raw)
    for t in range(n):
        N[t * n + t] = _k.qsub(N[t * n + t], lam)
    kerbases = [[]]
    power = N
    s = 0
    while True:
        ker = _nullspace(power, n, n)
        if len(ker) <= len(kerbases[-1]):
            raise AssertionError("kernel filtration stalled before the multiplicity")
        kerbases.append(ker)
        if len(ker) == mult:
            s = len(kerbases) - 1
            break
        power = _k.mat_mul(power, N, n, n, n)
    chains = []
    for k in range(s, 0, -1):
        tracker = _SpanTracker(n)
        for v in kerbases[k - 1]:
            tracker.add(v)
        for chain in chains:
            if not tracker.add(chain[k - 1]):
                raise AssertionError("chain image unexpectedly dependent")
        for v in kerbases[k]:
            if tracker.add(v):
                chain = [v]
                cur = v
                for _ in range(k - 1):
                    cur = _matvec(N, cur, n)
                    chain.append(cur)
                chain.reverse()
                chains.append(chain)
    if sum(len(c) for c in chains) != mult:
        raise AssertionError("chain lengths do not add up to the multiplicity")
    return chains


def _eigen_structure(raw, n):
    """Sorted [(eigenvalue raw, algebraic multiplicity)]; exact spectrum only."""
    report = gaussian_roots(PolynomialQi._wrap(_char_poly_raw(raw, n)))
    if not report.splits():
        raise NonSplittingSpectrumError(
            f"spectrum leaves Q(i); unresolved factor of degree {report.leftover.degree}")
    return [(lam.raw, mult) for lam, mult in report.roots]


def _columns_to_matrix(domain, columns, n):
    raw = [_QZERO] * (n * n)
    for j, col in enumerate(columns):
        for i in range(n):
            raw[i * n + j] = col[i]
    return Matrix._wrap(domain, n, n, raw)


def _finish(A, records):
    """Sort block records canonically, build P, verify, and package."""
    records.sort(key=lambda rec: rec[0])
    blocks = [rec[1] for rec in records]
    columns = [col for rec in records for col in rec[2]]
    spec = JordanSpec(A.domain, blocks)
    n = A.rows
    P = _columns_to_matrix(A.domain, columns, n)
    J = assemble(spec)
    if mat_mul(A, P) != mat_mul(P, J):
        raise AssertionError("Jordan chain assembly failed the A P = P J check")
    S = mat_inverse(P)
    return Decomposition(spec, S)


def _jordan_commutative(A: Matrix) -> Decomposition:
    n = A.rows
    records = []
    for lam, mult in _eigen_structure(list(A.raw), n):
        q = Quaternion._wrap(lam)
        for chain in _jordan_chains(list(A.raw), n, lam, mult):
            block = JordanBlock(q, len(chain))
            records.append(((q.a, q.b, -len(chain)), block, chain))
    return _finish(A, records)


def _fold_real_pair(chain):
    """Real columns (Re v_1, Im v_1, Re v_2, ...) for a complex chain of a real matrix."""
    cols = []
    for v in chain:
        re = []
        im = []
        for (a, b, _, _, den) in v:
            re.append(_k.qnorm(a, 0, 0, 0, den))
            im.append(_k.qnorm(b, 0, 0, 0, den))
        cols.append(re)
        cols.append(im)
    return cols


def _jordan_real(A: Matrix) -> Decomposition:
    n = A.rows
    structure = _eigen_structure(list(A.raw), n)
    mults = {(Quaternion._wrap(lam).a, Quaternion._wrap(lam).b): m
             for lam, m in structure}
    records = []
    for lam, mult in structure:
        q = Quaternion._wrap(lam)
        if q.b < 0:
            if mults.get((q.a, -q.b)) != mult:
                raise AssertionError("conjugate eigenvalues of a real matrix differ")
            continue
        chains = _jordan_chains(list(A.raw), n, lam, mult)
        if q.b == 0:
            for chain in chains:
                if any(e[1] != 0 for v in chain for e in v):
                    raise AssertionError("real eigenvalue produced a complex chain")
                block = JordanBlock(q, len(chain))
                records.append(((q.a, q.b, -len(chain)), block, chain))
        else:
            for chain in chains:
                block = JordanBlock(q, len(chain), real_complex_pair=True)
                records.append(((q.a, q.b, -len(chain)), block,
                                _fold_real_pair(chain)))
    return _finish(A, records)


def _adjoint_to_quaternion_column(z, n):
    """Map a column of the complex adjoint back to H^n: (z1, z2) -> z1 - conj(z2) j."""
    w = []
    for t in range(n):
        a, b, _, _, e1 = z[t]
        c, d, _, _, e2 = z[n + t]
        den = lcm(e1, e2)
        w.append(_k.qnorm(a * (den // e1), b * (den // e1),
                          -c * (den // e2), d * (den // e2), den))
    return w


def _jordan_quaternionic(A: Matrix) -> Decomposition:
    n = A.rows
    B = complex_adjoint(A)
    structure = _eigen_structure(list(B.raw), 2 * n)
    mults = {(Quaternion._wrap(lam).a, Quaternion._wrap(lam).b): m
             for lam, m in structure}
    records = []
    for lam, mult in structure:
        q = Quaternion._wrap(lam)
        if q.b < 0:
            if mults.get((q.a, -q.b)) != mult:
                raise AssertionError("adjoint spectrum is not conjugation symmetric")
            continue
        if q.b == 0:
            if mult % 2:
                raise AssertionError("real adjoint eigenvalue with odd multiplicity")
            # A - lam I is H-linear for real lam: build chains directly over H
            chains = _jordan_chains(list(A.raw), n, lam, mult // 2)
        else:
            cchains = _jordan_chains(list(B.raw), 2 * n, lam, mult)
            chains = [[_adjoint_to_quaternion_column(z, n) for z in ch]
                      for ch in cchains]
        for chain in chains:
            block = JordanBlock(q, len(chain))
            records.append(((q.a, q.b, -len(chain)), block, chain))
    return _finish(A, records)


def jordan_decompose(A: Matrix) -> Decomposition:
    """Exact Jordan decomposition: (spec, S) with S A S^{-1} = assemble(spec).

    Raises NonSplittingSpectrumError when any eigenvalue (for H: of the
    complex adjoint) lies outside Q(i).
    """
    if not A.is_square():
        raise ShapeMismatchError("jordan_decompose needs a square matrix")
    if A.domain is ScalarDomain.H:
        return _jordan_quaternionic(A)
    if A.domain is ScalarDomain.R:
        return _jordan_real(A)
    return _jordan_commutative(A)


def similarity_conjugator(A: Matrix, B: Matrix) -> Matrix:
    """Some S with S A S^{-1} = B exactly, or NotSimilarError."""
    if A.domain is not B.domain:
        raise DomainMismatchError("similarity needs a common domain")
    if (A.rows, A.cols) != (B.rows, B.cols) or not A.is_square():
        raise ShapeMismatchError("similarity needs equal square shapes")
    da = jordan_decompose(A)
    db = jordan_decompose(B)
    if da.spec != db.spec:
        raise NotSimilarError(f"specs differ: {da.spec} vs {db.spec}")
    return mat_mul(mat_inverse(db.conjugator), da.conjugator)


# ---------------------------------------------------------------------------
# invariant factors via polynomial Smith normal form

def _poly_smith_diagonal(P, n):
    """Diagonal of the Smith normal form of an n x n polynomial matrix."""
    for t in range(n):
        while True:
            bi = bj = -1
            bd = -1
            for i in range(t, n):
                for j in range(t, n):
                    d = _pdeg(P[i][j])
                    if d >= 0 and (bd < 0 or d < bd):
                        bi, bj, bd = i, j, d
            if bd < 0:
                return [P[s][s] for s in range(n)]
            if bi != t:
                P[t], P[bi] = P[bi], P[t]
            if bj != t:
                for row in P:
                    row[t], row[bj] = row[bj], row[t]
            pivot = P[t][t]
            dirty = False
            for i in range(t + 1, n):
                if P[i][t]:
                    q, r = _pdivmod(P[i][t], pivot)
                    if q:
                        for j in range(t, n):
                            P[i][j] = _psub(P[i][j], _pmul(q, P[t][j]))
                    P[i][t] = r
                    if r:
                        dirty = True
            for j in range(t + 1, n):
                if P[t][j]:
                    q, r = _pdivmod(P[t][j], pivot)
                    if q:
                        for i in range(t, n):
                            P[i][j] = _psub(P[i][j], _pmul(q, P[i][t]))
                    P[t][j] = r
                    if r:
                        dirty = True
            if dirty:
                continue
            viol = -1
            for i in range(t + 1, n):
                for j in range(t + 1, n):
                    if P[i][j]:
                        _, r = _pdivmod(P[i][j], pivot)
                        if r:
                            viol = i
                            break
                if viol >= 0:
                    break
            if viol < 0:
                break
            # classic fix: fold the offending row into the pivot row and retry
            for j in range(t, n):
                P[t][j] = _padd(P[t][j], P[viol][j])
        P[t][t] = _pmonic(P[t][t])
    return [P[t][t] for t in range(n)]


def invariant_factors(A: Matrix):
    """Nonunit invariant factors of xI - A, monic, each dividing the next.

    This is the eigenvalue-free similarity criterion over a field: two
    matrices over R or C are similar iff these lists coincide.  Works on
    matrices whose spectrum leaves Q(i), unlike jordan_decompose.
    """
    if A.domain is ScalarDomain.H:
        raise DomainMismatchError("invariant factors need a commutative domain; "
                                  "use complex_adjoint first")
    if not A.is_square():
        raise ShapeMismatchError("invariant_factors needs a square matrix")
    n = A.rows
    P = []
    for i in range(n):
        row = []
        for j in range(n):
            e = _k.qneg(A.raw[i * n + j])
            if i == j:
                row.append(_ptrim([e, _QONE]))
            else:
                row.append(_ptrim([e]))
        P.append(row)
    diag = _poly_smith_diagonal(P, n)
    return tuple(PolynomialQi._wrap(f) for f in diag if _pdeg(f) >= 1)
