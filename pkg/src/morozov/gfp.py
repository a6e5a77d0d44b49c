"""Exact arithmetic over GF(p): field elements, dense matrices, subspaces
in canonical reduced row echelon form, and univariate polynomial
factorization (Berlekamp).

Everything here is immutable after construction and all operations are
pure.  Entries are stored as plain ints reduced into [0, p); `Fp` is the
value type used at API boundaries.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

MAX_PRIME = 13
MAX_DIM = 64          # semantic cap: ambient dimensions of subspaces/algebras
_MAX_SCRATCH = 4096   # stacked constraint systems may be much taller


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def check_modulus(p: int) -> int:
    if not is_prime(p):
        raise ValueError(f"modulus {p} is not prime")
    if p > MAX_PRIME:
        raise ValueError(f"modulus {p} exceeds the supported bound {MAX_PRIME}")
    return p


def inv_mod(a: int, p: int) -> int:
    a %= p
    if a == 0:
        raise ZeroDivisionError("inverse of 0 in GF(p)")
    return pow(a, p - 2, p)


@dataclass(frozen=True)
class Fp:
    """An element of GF(p), reduced into [0, p)."""

    value: int
    p: int

    def __post_init__(self):
        check_modulus(self.p)
        object.__setattr__(self, "value", self.value % self.p)

    def _coerce(self, other) -> int:
        if isinstance(other, Fp):
            if other.p != self.p:
                raise ValueError("mixed moduli")
            return other.value
        return int(other) % self.p

    def __add__(self, other):
        return Fp(self.value + self._coerce(other), self.p)

    __radd__ = __add__

    def __sub__(self, other):
        return Fp(self.value - self._coerce(other), self.p)

    def __rsub__(self, other):
        return Fp(self._coerce(other) - self.value, self.p)

    def __mul__(self, other):
        return Fp(self.value * self._coerce(other), self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return Fp(-self.value, self.p)

    def inverse(self) -> "Fp":
        return Fp(inv_mod(self.value, self.p), self.p)

    def __truediv__(self, other):
        return self * Fp(self._coerce(other), self.p).inverse()

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"Fp({self.value} mod {self.p})"


class FieldMatrix:
    """Dense matrix over GF(p), entries stored row-major as ints."""

    __slots__ = ("rows", "cols", "p", "entries")

    def __init__(self, rows: int, cols: int, p: int, entries: Sequence[int]):
        check_modulus(p)
        if rows < 0 or cols < 0 or rows > _MAX_SCRATCH or cols > _MAX_SCRATCH:
            raise ValueError(f"dimensions {rows}x{cols} out of supported range")
        if len(entries) != rows * cols:
            raise ValueError("entry count does not match dimensions")
        self.rows = rows
        self.cols = cols
        self.p = p
        self.entries = tuple(e % p for e in entries)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], p: int) -> "FieldMatrix":
        r = len(rows)
        c = len(rows[0]) if r else 0
        flat = []
        for row in rows:
            if len(row) != c:
                raise ValueError("ragged rows")
            flat.extend(int(x) for x in row)
        return cls(r, c, p, flat)

    @classmethod
    def identity(cls, n: int, p: int) -> "FieldMatrix":
        return cls(n, n, p, [1 if i == j else 0 for i in range(n) for j in range(n)])

    @classmethod
    def zero(cls, rows: int, cols: int, p: int) -> "FieldMatrix":
        return cls(rows, cols, p, [0] * (rows * cols))

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> list:
        return [list(self.row(i)) for i in range(self.rows)]

    def entry(self, i: int, j: int) -> Fp:
        return Fp(self.entries[i * self.cols + j], self.p)

    def __eq__(self, other):
        return (isinstance(other, FieldMatrix) and self.p == other.p
                and self.rows == other.rows and self.cols == other.cols
                and self.entries == other.entries)

    def __hash__(self):
        return hash((self.rows, self.cols, self.p, self.entries))

    def __add__(self, other: "FieldMatrix") -> "FieldMatrix":
        self._check(other)
        return FieldMatrix(self.rows, self.cols, self.p,
                           [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other: "FieldMatrix") -> "FieldMatrix":
        self._check(other)
        return FieldMatrix(self.rows, self.cols, self.p,
                           [a - b for a, b in zip(self.entries, other.entries)])

    def __neg__(self):
        return FieldMatrix(self.rows, self.cols, self.p, [-a for a in self.entries])

    def scale(self, c: int) -> "FieldMatrix":
        c %= self.p
        return FieldMatrix(self.rows, self.cols, self.p, [c * a for a in self.entries])

    def _check(self, other):
        if self.p != other.p:
            raise ValueError("mixed moduli")
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch")

    def __matmul__(self, other: "FieldMatrix") -> "FieldMatrix":
        if self.p != other.p or self.cols != other.rows:
            raise ValueError("shape mismatch in product")
        p, n, m, k = self.p, self.rows, other.cols, self.cols
        a, b = self.entries, other.entries
        out = [0] * (n * m)
        for i in range(n):
            arow = a[i * k:(i + 1) * k]
            for t in range(k):
                av = arow[t]
                if av:
                    brow = b[t * m:(t + 1) * m]
                    base = i * m
                    for j in range(m):
                        out[base + j] += av * brow[j]
        return FieldMatrix(n, m, p, out)

    def matvec(self, v: Sequence[int]) -> list:
        if len(v) != self.cols:
            raise ValueError("vector length mismatch")
        p = self.p
        return [sum(self.entries[i * self.cols + j] * v[j] for j in range(self.cols)) % p
                for i in range(self.rows)]

    def transpose(self) -> "FieldMatrix":
        return FieldMatrix(self.cols, self.rows, self.p,
                           [self.entries[i * self.cols + j]
                            for j in range(self.cols) for i in range(self.rows)])

    def pow(self, e: int) -> "FieldMatrix":
        if self.rows != self.cols:
            raise ValueError("power of a non-square matrix")
        result = FieldMatrix.identity(self.rows, self.p)
        base = self
        while e > 0:
            if e & 1:
                result = result @ base
            e >>= 1
            if e:
                base = base @ base
        return result

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.entries)

    def trace(self) -> int:
        if self.rows != self.cols:
            raise ValueError("trace of a non-square matrix")
        return sum(self.entries[i * self.cols + i] for i in range(self.rows)) % self.p

    def is_nilpotent(self) -> bool:
        m = self
        for _ in range(self.rows.bit_length()):
            if m.is_zero():
                return True
            m = m @ m
        return m.is_zero()

    def nilpotency_order(self) -> int | None:
        """Least m with self^m = 0, or None if not nilpotent."""
        m = FieldMatrix.identity(self.rows, self.p)
        for k in range(self.rows + 1):
            if m.is_zero():
                return k
            m = m @ self
        return None if not m.is_zero() else self.rows + 1

    def __repr__(self):
        return f"FieldMatrix({self.to_rows()} mod {self.p})"


def _rref_rows(rows: list, cols: int, p: int) -> tuple:
    """In-place row reduction; returns (reduced rows, pivot columns)."""
    rows = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] % p != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = inv_mod(rows[r][c], p)
        rows[r] = [(x * inv) % p for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] % p != 0:
                f = rows[i][c] % p
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return [tuple(x % p for x in row) for row in rows], pivots


def rref(m: FieldMatrix) -> tuple:
    """Reduced row echelon form and rank.  RREF is the canonical form:
    equal row spaces give byte-equal results."""
    reduced, pivots = _rref_rows(m.to_rows(), m.cols, m.p)
    flat = [x for row in reduced for x in row]
    return FieldMatrix(m.rows, m.cols, m.p, flat), len(pivots)


def kernel(m: FieldMatrix) -> "Subspace":
    """Right kernel {v : m v = 0} as a canonical subspace of GF(p)^cols."""
    reduced, pivots = _rref_rows(m.to_rows(), m.cols, m.p)
    p = m.p
    free = [c for c in range(m.cols) if c not in pivots]
    basis = []
    for c in free:
        v = [0] * m.cols
        v[c] = 1
        for r, pc in enumerate(pivots):
            v[pc] = (-reduced[r][c]) % p
        basis.append(v)
    return Subspace.from_vectors(basis, m.cols, p)


class Subspace:
    """Subspace of GF(p)^n held in canonical RREF; the basis tuple is the
    equality certificate."""

    __slots__ = ("ambient_dim", "p", "basis")

    def __init__(self, ambient_dim: int, p: int, basis: Sequence[Sequence[int]]):
        check_modulus(p)
        if ambient_dim > MAX_DIM:
            raise ValueError("ambient dimension out of supported range")
        self.ambient_dim = ambient_dim
        self.p = p
        self.basis = tuple(tuple(x % p for x in row) for row in basis)

    @classmethod
    def from_vectors(cls, vectors: Iterable[Sequence[int]], ambient_dim: int, p: int) -> "Subspace":
        vecs = [list(v) for v in vectors]
        for v in vecs:
            if len(v) != ambient_dim:
                raise ValueError("vector length mismatch")
        if not vecs:
            return cls(ambient_dim, p, [])
        reduced, pivots = _rref_rows(vecs, ambient_dim, p)
        return cls(ambient_dim, p, reduced[:len(pivots)])

    @classmethod
    def zero(cls, ambient_dim: int, p: int) -> "Subspace":
        return cls(ambient_dim, p, [])

    @classmethod
    def full(cls, ambient_dim: int, p: int) -> "Subspace":
        return cls(ambient_dim, p,
                   [[1 if i == j else 0 for j in range(ambient_dim)] for i in range(ambient_dim)])

    @property
    def dim(self) -> int:
        return len(self.basis)

    def _check(self, other: "Subspace"):
        if self.p != other.p or self.ambient_dim != other.ambient_dim:
            raise ValueError("subspaces live in different ambient spaces")

    def __eq__(self, other):
        return (isinstance(other, Subspace) and self.p == other.p
                and self.ambient_dim == other.ambient_dim and self.basis == other.basis)

    def __hash__(self):
        return hash((self.ambient_dim, self.p, self.basis))

    def sum(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return Subspace.from_vectors(list(self.basis) + list(other.basis),
                                     self.ambient_dim, self.p)

    def intersect(self, other: "Subspace") -> "Subspace":
        self._check(other)
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(self.ambient_dim, self.p)
        # x = y A = z B  <=>  (y, z) in ker [A^T | -B^T]
        n = self.ambient_dim
        a, b = self.dim, other.dim
        rows = []
        for i in range(n):
            rows.append([self.basis[r][i] for r in range(a)]
                        + [(-other.basis[r][i]) % self.p for r in range(b)])
        ker = kernel(FieldMatrix.from_rows(rows, self.p))
        vecs = []
        for w in ker.basis:
            v = [0] * n
            for r in range(a):
                if w[r]:
                    for i in range(n):
                        v[i] = (v[i] + w[r] * self.basis[r][i]) % self.p
            vecs.append(v)
        return Subspace.from_vectors(vecs, n, self.p)

    def reduce_vector(self, v: Sequence[int]) -> list:
        """Residual of v after elimination against the canonical basis."""
        v = [x % self.p for x in v]
        for row in self.basis:
            lead = next(j for j, x in enumerate(row) if x)
            c = v[lead]
            if c:
                v = [(x - c * y) % self.p for x, y in zip(v, row)]
        return v

    def contains_vector(self, v: Sequence[int]) -> bool:
        return all(x == 0 for x in self.reduce_vector(v))

    def contains(self, other: "Subspace") -> bool:
        self._check(other)
        return all(self.contains_vector(row) for row in other.basis)

    def coordinates_of(self, v: Sequence[int]) -> list | None:
        """Coefficients of v in the canonical basis, or None if outside."""
        v = [x % self.p for x in v]
        coeffs = []
        for row in self.basis:
            lead = next(j for j, x in enumerate(row) if x)
            c = v[lead]
            coeffs.append(c)
            if c:
                v = [(x - c * y) % self.p for x, y in zip(v, row)]
        if any(v):
            return None
        return coeffs

    def enumerate_vectors(self):
        """Yield every vector of the subspace (p^dim of them)."""
        p, n = self.p, self.ambient_dim
        coeffs = [0] * self.dim
        while True:
            v = [0] * n
            for c, row in zip(coeffs, self.basis):
                if c:
                    for i in range(n):
                        v[i] = (v[i] + c * row[i]) % p
            yield v
            k = 0
            while k < self.dim and coeffs[k] == p - 1:
                coeffs[k] = 0
                k += 1
            if k == self.dim:
                return
            coeffs[k] += 1

    def __repr__(self):
        return f"Subspace(dim {self.dim} of GF({self.p})^{self.ambient_dim})"


# ---------------------------------------------------------------------------
# Univariate polynomials over GF(p)
# ---------------------------------------------------------------------------

class FpPoly:
    """Polynomial over GF(p); coefficients lowest degree first, trimmed."""

    __slots__ = ("p", "coeffs")

    def __init__(self, coeffs: Sequence[int], p: int):
        check_modulus(p)
        c = [x % p for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.p = p
        self.coeffs = tuple(c)

    @classmethod
    def zero(cls, p: int) -> "FpPoly":
        return cls([], p)

    @classmethod
    def x(cls, p: int) -> "FpPoly":
        return cls([0, 1], p)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        return isinstance(other, FpPoly) and self.p == other.p and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.p, self.coeffs))

    def __add__(self, other: "FpPoly") -> "FpPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [0] * (n - len(self.coeffs))
        b = list(other.coeffs) + [0] * (n - len(other.coeffs))
        return FpPoly([x + y for x, y in zip(a, b)], self.p)

    def __sub__(self, other: "FpPoly") -> "FpPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [0] * (n - len(self.coeffs))
        b = list(other.coeffs) + [0] * (n - len(other.coeffs))
        return FpPoly([x - y for x, y in zip(a, b)], self.p)

    def __mul__(self, other: "FpPoly") -> "FpPoly":
        if self.is_zero() or other.is_zero():
            return FpPoly.zero(self.p)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return FpPoly(out, self.p)

    def scale(self, c: int) -> "FpPoly":
        return FpPoly([c * a for a in self.coeffs], self.p)

    def monic(self) -> "FpPoly":
        if self.is_zero():
            return self
        return self.scale(inv_mod(self.coeffs[-1], self.p))

    def divmod(self, other: "FpPoly") -> tuple:
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        p = self.p
        rem = list(self.coeffs)
        quot = [0] * max(0, len(rem) - len(other.coeffs) + 1)
        dlead = inv_mod(other.coeffs[-1], p)
        for i in range(len(rem) - len(other.coeffs), -1, -1):
            c = (rem[i + len(other.coeffs) - 1] * dlead) % p
            if c:
                quot[i] = c
                for j, b in enumerate(other.coeffs):
                    rem[i + j] = (rem[i + j] - c * b) % p
        return FpPoly(quot, p), FpPoly(rem, p)

    def __mod__(self, other: "FpPoly") -> "FpPoly":
        return self.divmod(other)[1]

    def __floordiv__(self, other: "FpPoly") -> "FpPoly":
        return self.divmod(other)[0]

    def gcd(self, other: "FpPoly") -> "FpPoly":
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def derivative(self) -> "FpPoly":
        return FpPoly([(i * c) % self.p for i, c in enumerate(self.coeffs)][1:], self.p)

    def evaluate(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % self.p
        return acc

    def pow_mod(self, e: int, modulus: "FpPoly") -> "FpPoly":
        result = FpPoly([1], self.p)
        base = self % modulus
        while e > 0:
            if e & 1:
                result = (result * base) % modulus
            e >>= 1
            if e:
                base = (base * base) % modulus
        return result

    def __repr__(self):
        if self.is_zero():
            return f"FpPoly(0 mod {self.p})"
        terms = [f"{c}*x^{i}" for i, c in enumerate(self.coeffs) if c]
        return f"FpPoly({' + '.join(terms)} mod {self.p})"


def _berlekamp_splitting(f: FpPoly) -> list:
    """Split a squarefree monic f into irreducible monic factors."""
    p, n = f.p, f.degree
    if n <= 1:
        return [f]
    # Berlekamp matrix: rows are x^(p*i) mod f for i < n.
    x = FpPoly.x(p)
    xp = x.pow_mod(p, f)
    rows = []
    power = FpPoly([1], p)
    for i in range(n):
        coeffs = list(power.coeffs) + [0] * (n - len(power.coeffs))
        rows.append(coeffs)
        power = (power * xp) % f
    q = FieldMatrix.from_rows(rows, p).transpose()
    null = kernel(q - FieldMatrix.identity(n, p))
    if null.dim == 1:
        return [f.monic()]
    factors = [f.monic()]
    for bvec in null.basis:
        v = FpPoly(list(bvec), p)
        if v.degree < 1:
            continue
        next_factors = []
        for g in factors:
            if g.degree <= 1:
                next_factors.append(g)
                continue
            pieces = []
            rest = g
            for s in range(p):
                d = rest.gcd(v - FpPoly([s], p))
                if 0 < d.degree < rest.degree:
                    pieces.append(d)
                    rest = rest // d
            pieces.append(rest)
            next_factors.extend(pc for pc in pieces if pc.degree >= 1)
        factors = next_factors
        if len(factors) == null.dim:
            break
    out = []
    for g in factors:
        if g.degree == 1:
            out.append(g.monic())
        else:
            out.extend(_berlekamp_splitting(g.monic()))
    return out


def factor(f: FpPoly) -> list:
    """Complete factorization into monic irreducibles with multiplicities,
    sorted by (degree, coefficients).  The leading unit is dropped; the
    invariant is unit * product(irr^mult) == f."""
    if f.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    p = f.p
    result: dict = {}

    def decompose(g: FpPoly, mult: int):
        if g.degree <= 0:
            return
        d = g.derivative()
        if d.is_zero():
            # g = h(x^p) = h^p over the prime field (Frobenius fixes GF(p))
            base = FpPoly([g.coeffs[i] for i in range(0, len(g.coeffs), p)], p)
            decompose(base, mult * p)
            return
        # every irreducible factor of g with multiplicity not divisible by p
        # shows up in the squarefree part; the leftover has zero derivative
        sqfree = g // g.gcd(d)
        leftover = g
        for irr in _berlekamp_splitting(sqfree):
            m = 0
            while True:
                quot, rem = leftover.divmod(irr)
                if not rem.is_zero():
                    break
                m += 1
                leftover = quot
            if m:
                result[irr] = result.get(irr, 0) + mult * m
        decompose(leftover, mult)

    decompose(f.monic(), 1)
    return sorted(result.items(), key=lambda kv: (kv[0].degree, kv[0].coeffs))
