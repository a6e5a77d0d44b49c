"""Restricted Lie algebras of the classical families with matrix
realizations: structure constants, brackets, the p-power map and the
Jacobson correction term, truncated exponentials, Killing form,
normalisers/centralisers and the subalgebra calculus.

The p-power map always goes through the realization (matrix p-th powers,
taken modulo scalars for the central quotient family), so its correctness
is anchored to matrix arithmetic rather than hand-entered tables.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Optional, Sequence

from .gfp import (FieldMatrix, Fp, Subspace, check_modulus, inv_mod, kernel,
                  rref)
from .rootdata import RootDatum, build_rootdatum

FAMILIES = ("gl", "sl", "pgl", "sp", "so")


# ---------------------------------------------------------------------------
# Realization and torus frame
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Realization:
    n: int
    mats: tuple            # one FieldMatrix per basis element (representatives)
    mod_scalars: bool      # quotient by scalar matrices (pgl)


class TorusFrame:
    """Standard-torus bookkeeping for a built family: which basis indices
    span the diagonal Cartan, the root attached to every other index, and
    the embedding of cocharacter vectors as diagonal exponent patterns."""

    def __init__(self, family: str, n: int, rootdatum: RootDatum,
                 torus_indices: Sequence[int], index_root: dict,
                 cochar_rank: int, sum_zero: bool):
        self.family = family
        self.n = n
        self.rootdatum = rootdatum
        self.torus_indices = tuple(torus_indices)
        self.index_root = dict(index_root)
        self.root_index = {r: i for i, r in index_root.items()}
        self.cochar_rank = cochar_rank
        self.sum_zero = sum_zero

    def diag_exponents(self, lam: Sequence[int]) -> list:
        """Diagonal exponent pattern of the cocharacter on the realization."""
        lam = list(lam)
        if len(lam) != self.cochar_rank:
            raise ValueError("cocharacter length mismatch")
        if self.sum_zero and sum(lam) != 0:
            raise ValueError("sum-zero cocharacter required for this family")
        if self.family in ("gl", "sl", "pgl"):
            return lam
        if self.family == "sp":
            return lam + [-x for x in lam]
        if self.family == "so":
            k = self.cochar_rank
            middle = [0] if self.n % 2 else []
            return lam + middle + [-x for x in reversed(lam)]
        raise ValueError(self.family)

    def weight(self, lam: Sequence[int], basis_index: int) -> int:
        root = self.index_root.get(basis_index)
        if root is None:
            return 0
        return sum(a * b for a, b in zip(lam, root))


class LieAlgebra:
    """A restricted Lie algebra given by structure constants over GF(p)
    plus a faithful (or central-quotient) matrix realization."""

    def __init__(self, p: int, labels: Sequence[str], realization: Realization,
                 frame: Optional[TorusFrame] = None, family: Optional[str] = None,
                 verify: bool = True):
        check_modulus(p)
        self.p = p
        self.labels = tuple(labels)
        self.dim = len(labels)
        self.realization = realization
        self.frame = frame
        self.family = family
        self._memo: dict = {}
        self._build_coordinatizer()
        self._build_structure()
        if verify:
            self._verify_structure()

    # -- coordinates ---------------------------------------------------

    def _vectorize(self, m: FieldMatrix) -> list:
        n = self.realization.n
        if self.realization.mod_scalars:
            c = m.entries[(n - 1) * n + (n - 1)]
            return [(e - c) % self.p if i % (n + 1) == 0 else e % self.p
                    for i, e in enumerate(m.entries)]
        return list(m.entries)

    def _build_coordinatizer(self):
        rows = [self._vectorize(m) for m in self.realization.mats]
        n2 = self.realization.n ** 2
        # row-reduce the basis matrix once, remembering the operations via
        # an augmented identity block
        aug = [list(r) + [1 if i == j else 0 for j in range(self.dim)]
               for i, r in enumerate(rows)]
        p = self.p
        pivots = []
        r = 0
        for c in range(n2):
            piv = next((i for i in range(r, self.dim) if aug[i][c] % p), None)
            if piv is None:
                continue
            aug[r], aug[piv] = aug[piv], aug[r]
            inv = inv_mod(aug[r][c], p)
            aug[r] = [(x * inv) % p for x in aug[r]]
            for i in range(self.dim):
                if i != r and aug[i][c] % p:
                    f = aug[i][c]
                    aug[i] = [(x - f * y) % p for x, y in zip(aug[i], aug[r])]
            pivots.append(c)
            r += 1
            if r == self.dim:
                break
        if r != self.dim:
            raise ValueError("realization matrices are linearly dependent")
        self._pivots = pivots
        self._reduced_rows = [row[:n2] for row in aug]
        self._transform = [row[n2:] for row in aug]

    def coordinates_of_matrix(self, m: FieldMatrix) -> list:
        """Coordinates of a realizing matrix in the basis; raises if the
        (canonicalized) matrix is outside the span."""
        p = self.p
        v = self._vectorize(m)
        coeffs = [0] * self.dim
        for r, c in enumerate(self._pivots):
            f = v[c] % p
            if f:
                coeffs[r] = f
                v = [(x - f * y) % p for x, y in zip(v, self._reduced_rows[r])]
        if any(x % p for x in v):
            raise ValueError("matrix not in the span of the basis")
        out = [0] * self.dim
        for r in range(self.dim):
            if coeffs[r]:
                for j in range(self.dim):
                    out[j] = (out[j] + coeffs[r] * self._transform[r][j]) % p
        return out

    def matrix_of(self, coords: Sequence[int]) -> FieldMatrix:
        n = self.realization.n
        p = self.p
        acc = [0] * (n * n)
        for c, m in zip(coords, self.realization.mats):
            if c % p:
                for i, e in enumerate(m.entries):
                    acc[i] = (acc[i] + c * e) % p
        return FieldMatrix(n, n, p, acc)

    # -- structure constants -------------------------------------------

    def _build_structure(self):
        p = self.p
        self._sc: dict = {}
        mats = self.realization.mats
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                bracket = mats[i] @ mats[j] - mats[j] @ mats[i]
                coords = tuple(self.coordinates_of_matrix(bracket))
                if any(coords):
                    self._sc[(i, j)] = coords
        # sparse per-pair view used by the hot loops
        self._sparse = {}
        for (i, j), coords in self._sc.items():
            entries = tuple((k, c) for k, c in enumerate(coords) if c)
            self._sparse[(i, j)] = entries

    def structure_constants(self) -> dict:
        """Map (i, j) -> coordinates of [b_i, b_j], for i < j."""
        return dict(self._sc)

    def bracket_vec(self, x: Sequence[int], y: Sequence[int]) -> list:
        p = self.p
        out = [0] * self.dim
        for (i, j), entries in self._sparse.items():
            f = (x[i] * y[j] - x[j] * y[i]) % p
            if f:
                for k, c in entries:
                    out[k] = (out[k] + f * c) % p
        return out

    def ad_matrix_vec(self, x: Sequence[int]) -> FieldMatrix:
        cols = []
        for j in range(self.dim):
            unit = [0] * self.dim
            unit[j] = 1
            cols.append(self.bracket_vec(x, unit))
        flat = [cols[j][i] for i in range(self.dim) for j in range(self.dim)]
        return FieldMatrix(self.dim, self.dim, self.p, flat)

    def p_power_vec(self, x: Sequence[int]) -> list:
        m = self.matrix_of(x)
        return self.coordinates_of_matrix(m.pow(self.p))

    def _verify_structure(self):
        units = []
        for i in range(self.dim):
            u = [0] * self.dim
            u[i] = 1
            units.append(u)
        rng_triples = (
            [(i, j, k) for i in range(self.dim) for j in range(self.dim)
             for k in range(self.dim)]
            if self.dim <= 12 else
            [( (7 * t) % self.dim, (11 * t + 1) % self.dim, (13 * t + 2) % self.dim)
             for t in range(2000)]
        )
        for i, j, k in rng_triples:
            a = self.bracket_vec(units[i], self.bracket_vec(units[j], units[k]))
            b = self.bracket_vec(units[j], self.bracket_vec(units[i], units[k]))
            c = self.bracket_vec(self.bracket_vec(units[i], units[j]), units[k])
            if any((ai - bi - ci) % self.p for ai, bi, ci in zip(a, b, c)):
                raise AssertionError("Jacobi identity fails on basis triple")
        for i in range(self.dim):
            adp = self.ad_matrix_vec(units[i]).pow(self.p)
            adq = self.ad_matrix_vec(self.p_power_vec(units[i]))
            if adp != adq:
                raise AssertionError("ad(x^[p]) != ad(x)^p on a basis element")

    # -- elements --------------------------------------------------------

    def element(self, coords: Sequence[int]) -> "Element":
        return Element(self, tuple(c % self.p for c in coords))

    def basis_element(self, i: int) -> "Element":
        coords = [0] * self.dim
        coords[i] = 1
        return self.element(coords)

    def element_by_label(self, label: str) -> "Element":
        return self.basis_element(self.labels.index(label))

    def zero(self) -> "Element":
        return self.element([0] * self.dim)

    def subspace(self, vectors) -> Subspace:
        return Subspace.from_vectors(vectors, self.dim, self.p)

    def full_space(self) -> Subspace:
        return Subspace.full(self.dim, self.p)

    # -- killing form ------------------------------------------------------

    def killing_gram(self) -> FieldMatrix:
        if "gram" not in self._memo:
            ads = [self.ad_matrix_vec([1 if k == i else 0 for k in range(self.dim)])
                   for i in range(self.dim)]
            entries = []
            for i in range(self.dim):
                for j in range(self.dim):
                    entries.append((ads[i] @ ads[j]).trace())
            self._memo["gram"] = FieldMatrix(self.dim, self.dim, self.p, entries)
        return self._memo["gram"]

    def killing_form(self, x: "Element", y: "Element") -> Fp:
        g = self.killing_gram()
        val = 0
        for i, xi in enumerate(x.coords):
            if xi:
                row = g.row(i)
                val += xi * sum(row[j] * y.coords[j] for j in range(self.dim))
        return Fp(val, self.p)

    def killing_nondegenerate(self) -> bool:
        return rref(self.killing_gram())[1] == self.dim

    def orthogonal(self, s: Subspace) -> Subspace:
        """Orthogonal complement w.r.t. the Killing form."""
        g = self.killing_gram()
        if s.dim == 0:
            return self.full_space()
        rows = []
        for v in s.basis:
            rows.append([sum(v[i] * g.entries[i * self.dim + j]
                             for i in range(self.dim)) % self.p
                         for j in range(self.dim)])
        return kernel(FieldMatrix.from_rows(rows, self.p))

    # -- normalisers and friends -------------------------------------------

    def normalizer(self, u: Subspace) -> Subspace:
        key = ("norm", u.basis)
        if key not in self._memo:
            if u.dim == 0:
                self._memo[key] = self.full_space()
            else:
                rows = []
                units = [[1 if k == i else 0 for k in range(self.dim)]
                         for i in range(self.dim)]
                cols = []
                for i in range(self.dim):
                    col = []
                    for bv in u.basis:
                        col.extend(u.reduce_vector(self.bracket_vec(units[i], list(bv))))
                    cols.append(col)
                height = len(cols[0])
                rows = [[cols[i][r] for i in range(self.dim)] for r in range(height)]
                self._memo[key] = kernel(FieldMatrix.from_rows(rows, self.p))
        return self._memo[key]

    def centralizer(self, u: Subspace) -> Subspace:
        if u.dim == 0:
            return self.full_space()
        units = [[1 if k == i else 0 for k in range(self.dim)]
                 for i in range(self.dim)]
        cols = []
        for i in range(self.dim):
            col = []
            for bv in u.basis:
                col.extend(self.bracket_vec(units[i], list(bv)))
            cols.append(col)
        height = len(cols[0])
        rows = [[cols[i][r] for i in range(self.dim)] for r in range(height)]
        return kernel(FieldMatrix.from_rows(rows, self.p))

    def center(self) -> Subspace:
        return self.centralizer(self.full_space())

    def bracket_spaces(self, a: Subspace, b: Subspace) -> Subspace:
        vecs = []
        for x in a.basis:
            for y in b.basis:
                vecs.append(self.bracket_vec(list(x), list(y)))
        return Subspace.from_vectors(vecs, self.dim, self.p)

    def subalgebra_closure(self, gens: Sequence["Element"]) -> Subspace:
        span = Subspace.from_vectors([g.coords for g in gens], self.dim, self.p)
        while True:
            grown = span.sum(self.bracket_spaces(span, span))
            if grown.dim == span.dim:
                return span
            span = grown

    def is_subalgebra(self, u: Subspace) -> bool:
        return u.contains(self.bracket_spaces(u, u))

    def derived_series(self, u: Subspace) -> list:
        series = [u]
        while series[-1].dim:
            nxt = self.bracket_spaces(series[-1], series[-1])
            if nxt.dim == series[-1].dim:
                series.append(nxt)
                break
            series.append(nxt)
        return series

    def lower_central_series(self, u: Subspace) -> list:
        series = [u]
        while series[-1].dim:
            nxt = self.bracket_spaces(u, series[-1])
            if nxt.dim == series[-1].dim:
                series.append(nxt)
                break
            series.append(nxt)
        return series

    def is_solvable(self, u: Subspace) -> bool:
        return self.derived_series(u)[-1].dim == 0

    def is_nilpotent(self, u: Subspace) -> bool:
        return self.lower_central_series(u)[-1].dim == 0

    def largest_ideal_inside(self, h: Subspace, v: Subspace) -> Subspace:
        """Largest h-ideal contained in v (v must sit inside h): the fixed
        point of W <- {x in W : [h, x] subset of W}."""
        if not h.contains(v):
            raise ValueError("v must be contained in h")
        w = v
        while w.dim:
            hb = [list(r) for r in h.basis]
            # condition on x = sum c_r w_r : [h_i, x] in w for all i
            cols = []
            for r, wb in enumerate(w.basis):
                col = []
                for hv in hb:
                    col.extend(w.reduce_vector(self.bracket_vec(hv, list(wb))))
                cols.append(col)
            height = len(cols[0]) if cols else 0
            mat = FieldMatrix.from_rows(
                [[cols[r][t] for r in range(w.dim)] for t in range(height)], self.p)
            ker = kernel(mat)
            vecs = []
            for coeffs in ker.basis:
                vec = [0] * self.dim
                for c, wb in zip(coeffs, w.basis):
                    if c:
                        for i in range(self.dim):
                            vec[i] = (vec[i] + c * wb[i]) % self.p
                vecs.append(vec)
            new = Subspace.from_vectors(vecs, self.dim, self.p)
            if new.dim == w.dim:
                return w
            w = new
        return w

    # -- exponentials -----------------------------------------------------

    def _nilpotent_representative(self, x: "Element") -> FieldMatrix:
        m = self.matrix_of(x.coords)
        if not self.realization.mod_scalars:
            if not m.is_nilpotent():
                raise ValueError("element is not a nilpotent matrix")
            return m
        n = self.realization.n
        for c in range(self.p):
            shifted = m + FieldMatrix.identity(n, self.p).scale(c)
            if shifted.is_nilpotent():
                return shifted
        raise ValueError("no nilpotent representative exists for this class")

    def exp_trunc(self, x: "Element") -> FieldMatrix:
        """Truncated exponential sum_{i<p} X^i / i! of a nilpotent
        representative with nilpotency order < p."""
        m = self._nilpotent_representative(x)
        order = m.nilpotency_order()
        if order is None or order > self.p - 1:
            raise ValueError("matrix nilpotency order must be < p")
        return exp_trunc_matrix(m, self.p)

    def ad_exp_compat(self, x: "Element") -> bool:
        """Whether conjugation by exp(x) equals the truncated exponential
        of ad(x) as operators on the algebra."""
        e = self.exp_trunc(x)
        eneg = self.exp_trunc(self.element([(-c) % self.p for c in x.coords]))
        cols = []
        for i in range(self.dim):
            conj = e @ self.realization.mats[i] @ eneg
            cols.append(self.coordinates_of_matrix(conj))
        flat = [cols[j][i] for i in range(self.dim) for j in range(self.dim)]
        conj_op = FieldMatrix(self.dim, self.dim, self.p, flat)
        ad_op = exp_trunc_matrix(self.ad_matrix_vec(x.coords), self.p)
        return conj_op == ad_op

    # -- misc ---------------------------------------------------------------

    def __repr__(self):
        tag = self.family or "custom"
        return f"LieAlgebra({tag}, dim {self.dim}, p={self.p})"


def exp_trunc_matrix(m: FieldMatrix, p: int) -> FieldMatrix:
    """sum_{i=0}^{p-1} m^i / i!  (no nilpotency requirement; callers decide
    whether the truncation is the full series)."""
    acc = FieldMatrix.identity(m.rows, p)
    term = FieldMatrix.identity(m.rows, p)
    fact_inv = 1
    for i in range(1, p):
        term = term @ m
        fact_inv = (fact_inv * inv_mod(i, p)) % p
        acc = acc + term.scale(fact_inv)
    return acc


class Element:
    """A vector of the algebra in basis coordinates."""

    __slots__ = ("algebra", "coords")

    def __init__(self, algebra: LieAlgebra, coords: tuple):
        if len(coords) != algebra.dim:
            raise ValueError("coordinate length mismatch")
        self.algebra = algebra
        self.coords = coords

    def _check(self, other: "Element"):
        if self.algebra is not other.algebra:
            raise ValueError("elements of different algebras")

    def __add__(self, other: "Element") -> "Element":
        self._check(other)
        return self.algebra.element([a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other: "Element") -> "Element":
        self._check(other)
        return self.algebra.element([a - b for a, b in zip(self.coords, other.coords)])

    def scale(self, c: int) -> "Element":
        return self.algebra.element([c * a for a in self.coords])

    def __neg__(self):
        return self.scale(-1)

    def __eq__(self, other):
        return (isinstance(other, Element) and self.algebra is other.algebra
                and self.coords == other.coords)

    def __hash__(self):
        return hash((id(self.algebra), self.coords))

    def is_zero(self) -> bool:
        return not any(self.coords)

    def bracket(self, other: "Element") -> "Element":
        self._check(other)
        return self.algebra.element(self.algebra.bracket_vec(self.coords, other.coords))

    def ad(self) -> FieldMatrix:
        return self.algebra.ad_matrix_vec(self.coords)

    def matrix(self) -> FieldMatrix:
        return self.algebra.matrix_of(self.coords)

    def p_power(self) -> "Element":
        return self.algebra.element(self.algebra.p_power_vec(self.coords))

    def p_power_iterate(self, m: int) -> "Element":
        x = self
        for _ in range(m):
            x = x.p_power()
        return x

    def __repr__(self):
        terms = [f"{c}*{self.algebra.labels[i]}" for i, c in enumerate(self.coords) if c]
        return "Element(" + (" + ".join(terms) if terms else "0") + ")"


# ---------------------------------------------------------------------------
# Jacobson correction term
# ---------------------------------------------------------------------------

def jacobson_defect(x: Element, y: Element) -> Element:
    """The correction W(x, y) in (x+y)^[p] = x^[p] + y^[p] - W(x, y).

    Evaluated by expanding ad(t x + y)^(p-1)(x) as a polynomial in t and
    combining the coefficient of t^(i-1) with weight -1/i."""
    alg = x.algebra
    x._check(y)
    p = alg.p
    adx = alg.ad_matrix_vec(x.coords)
    ady = alg.ad_matrix_vec(y.coords)
    poly = {0: list(x.coords)}
    for _ in range(p - 1):
        nxt: dict = {}
        for deg, vec in poly.items():
            up = adx.matvec(vec)
            same = ady.matvec(vec)
            if any(up):
                tgt = nxt.setdefault(deg + 1, [0] * alg.dim)
                for i, v in enumerate(up):
                    tgt[i] = (tgt[i] + v) % p
            if any(same):
                tgt = nxt.setdefault(deg, [0] * alg.dim)
                for i, v in enumerate(same):
                    tgt[i] = (tgt[i] + v) % p
        poly = nxt
    out = [0] * alg.dim
    for i in range(1, p):
        vec = poly.get(i - 1)
        if vec:
            w = inv_mod(i, p)
            for k, v in enumerate(vec):
                out[k] = (out[k] - w * v) % p
    return alg.element(out)


def jacobson_defect_reference(x: Element, y: Element) -> Element:
    """Literal selector-map sum (exponential in p; cross-check only):
    sum over maps u : [1, p-1] -> {0, 1} grouped by the number r of zeros,
    each term ad x_{u(1)} ... ad x_{u(p-1)} (x) weighted by 1/r, where
    value 1 selects x and value 0 selects y."""
    alg = x.algebra
    p = alg.p
    adx = alg.ad_matrix_vec(x.coords)
    ady = alg.ad_matrix_vec(y.coords)
    total = [0] * alg.dim
    for mask in range(1 << (p - 1)):
        r = (p - 1) - bin(mask).count("1")
        if r == 0:
            continue
        vec = list(x.coords)
        for pos in reversed(range(p - 1)):
            vec = (adx if mask >> pos & 1 else ady).matvec(vec)
        w = inv_mod(r, p)
        for k, v in enumerate(vec):
            total[k] = (total[k] + w * v) % p
    return alg.element(total)


# ---------------------------------------------------------------------------
# Family constructions
# ---------------------------------------------------------------------------

def _unit_matrix(n: int, p: int, i: int, j: int, c: int = 1) -> FieldMatrix:
    entries = [0] * (n * n)
    entries[i * n + j] = c % p
    return FieldMatrix(n, n, p, entries)


def _roots_sorted(rd: RootDatum):
    def height(r):
        return sum(rd.simple_coefficients(list(r)))
    pos = sorted(rd.positive_roots, key=lambda r: (height(r), r))
    return pos + [tuple(-x for x in r) for r in pos]


def _build_gl_like(family: str, n: int, p: int) -> LieAlgebra:
    rd = build_rootdatum("A", n - 1)
    mats, labels, index_root = [], [], {}
    if family == "gl":
        torus_count = n
        for i in range(n):
            mats.append(_unit_matrix(n, p, i, i))
            labels.append(f"t{i + 1}")
    elif family == "pgl":
        # classes of the first n-1 diagonal units stay independent mod
        # scalars for every p, unlike the sl-style differences when p | n
        torus_count = n - 1
        for i in range(n - 1):
            mats.append(_unit_matrix(n, p, i, i))
            labels.append(f"t{i + 1}")
    else:
        torus_count = n - 1
        for i in range(n - 1):
            m = _unit_matrix(n, p, i, i) - _unit_matrix(n, p, i + 1, i + 1)
            mats.append(m)
            labels.append(f"h{i + 1}")
    for root in _roots_sorted(rd):
        i = root.index(1)
        j = root.index(-1)
        index_root[len(mats)] = root
        mats.append(_unit_matrix(n, p, i, j))
        labels.append(f"e{i + 1}{j + 1}" if i < j else f"f{j + 1}{i + 1}")
    frame = TorusFrame(family, n, rd, range(torus_count), index_root,
                       cochar_rank=n, sum_zero=family in ("sl", "pgl"))
    real = Realization(n, tuple(mats), mod_scalars=(family == "pgl"))
    return LieAlgebra(p, labels, real, frame=frame, family=f"{family}{n}")


def _sp_root_matrix(n: int, p: int, root: tuple) -> FieldMatrix:
    N = 2 * n
    pos = [i for i, c in enumerate(root) if c]
    if len(pos) == 1:
        i = pos[0]
        c = root[i]
        if c == 2:
            return _unit_matrix(N, p, i, n + i)
        if c == -2:
            return _unit_matrix(N, p, n + i, i)
        raise ValueError(root)
    i, j = pos
    ci, cj = root[i], root[j]
    if ci == 1 and cj == -1:
        return _unit_matrix(N, p, i, j) - _unit_matrix(N, p, n + j, n + i)
    if ci == -1 and cj == 1:
        return _unit_matrix(N, p, j, i) - _unit_matrix(N, p, n + i, n + j)
    if ci == 1 and cj == 1:
        return _unit_matrix(N, p, i, n + j) + _unit_matrix(N, p, j, n + i)
    if ci == -1 and cj == -1:
        return _unit_matrix(N, p, n + j, i) + _unit_matrix(N, p, n + i, j)
    raise ValueError(root)


def _build_sp(n: int, p: int) -> LieAlgebra:
    """sp_{2n} for the form J = [[0, I], [-I, 0]]."""
    rd = build_rootdatum("C", n)
    N = 2 * n
    mats, labels, index_root = [], [], {}
    for i in range(n):
        mats.append(_unit_matrix(N, p, i, i) - _unit_matrix(N, p, n + i, n + i))
        labels.append(f"t{i + 1}")
    for root in _roots_sorted(rd):
        index_root[len(mats)] = root
        mats.append(_sp_root_matrix(n, p, root))
        labels.append("x" + str(root).replace(" ", ""))
    frame = TorusFrame("sp", n, rd, range(n), index_root,
                       cochar_rank=n, sum_zero=False)
    return LieAlgebra(p, labels, Realization(N, tuple(mats), False),
                      frame=frame, family=f"sp{N}")


def _build_so(m: int, p: int) -> LieAlgebra:
    """so_m for the antidiagonal symmetric form (split form, p odd)."""
    if p == 2:
        raise ValueError("so is not supported at p = 2")
    k = m // 2
    rd = build_rootdatum("B", k) if m % 2 else build_rootdatum("D", k)
    mirror = lambda i: m - 1 - i

    def x(i, j):
        return _unit_matrix(m, p, i, j) - _unit_matrix(m, p, mirror(j), mirror(i))

    mats, labels, index_root = [], [], {}
    for i in range(k):
        mats.append(x(i, i))
        labels.append(f"t{i + 1}")

    # weight of position (i, j) under the standard torus
    def posweight(i):
        if i < k:
            return [1 if t == i else 0 for t in range(k)]
        if mirror(i) < k:
            return [-1 if t == mirror(i) else 0 for t in range(k)]
        return [0] * k

    seen = set()
    root_mat = {}
    for i in range(m):
        for j in range(m):
            if i == j or j == mirror(i):
                continue
            key = frozenset(((i, j), (mirror(j), mirror(i))))
            if key in seen:
                continue
            seen.add(key)
            w = tuple(a - b for a, b in zip(posweight(i), posweight(j)))
            root_mat[w] = x(i, j)
    for root in _roots_sorted(rd):
        if root not in root_mat:
            raise AssertionError("so frame mismatch")
        index_root[len(mats)] = root
        mats.append(root_mat[root])
        labels.append("x" + str(root).replace(" ", ""))
    frame = TorusFrame("so", m, rd, range(k), index_root,
                       cochar_rank=k, sum_zero=False)
    return LieAlgebra(p, labels, Realization(m, tuple(mats), False),
                      frame=frame, family=f"so{m}")


@lru_cache(maxsize=None)
def build(family: str, n: int, p: int) -> LieAlgebra:
    """Build one of gl_n, sl_n, pgl_n, sp_2n (n = rank), so_n."""
    check_modulus(p)
    if family in ("gl", "sl", "pgl"):
        if n < 2 or n > 8:
            raise ValueError("n out of range for gl/sl/pgl")
        return _build_gl_like(family, n, p)
    if family == "sp":
        if n % 2 or n < 4 or n > 12:
            raise ValueError("sp takes the matrix size 2k, k >= 2")
        return _build_sp(n // 2, p)
    if family == "so":
        if n < 5 or n > 12:
            raise ValueError("so supported for 5 <= n <= 12")
        return _build_so(n, p)
    raise ValueError(f"unknown family {family!r}")


# ---------------------------------------------------------------------------
# Standard subalgebras in the torus frame
# ---------------------------------------------------------------------------

def torus_subspace(g: LieAlgebra) -> Subspace:
    vecs = []
    for i in g.frame.torus_indices:
        v = [0] * g.dim
        v[i] = 1
        vecs.append(v)
    return g.subspace(vecs)


def root_vector_index(g: LieAlgebra, root) -> int:
    return g.frame.root_index[tuple(root)]


def standard_parabolic(g: LieAlgebra, chosen_simples) -> dict:
    """The standard parabolic for a subset of simple roots: returns the
    subalgebra, its nilradical, the Levi part and the root subset."""
    rd = g.frame.rootdatum
    chosen = frozenset(chosen_simples)
    subset = set(rd.positive_roots)
    n = rd.rank
    for r in rd.roots:
        coeffs = rd.simple_coefficients(list(r))
        if all(c <= 0 for c in coeffs) and all(
                coeffs[i] == 0 for i in range(n) if i not in chosen):
            subset.add(tuple(r))
    sym = {r for r in subset if tuple(-x for x in r) in subset}
    nilroots = sorted(subset - sym)
    vecs = []
    for i in g.frame.torus_indices:
        v = [0] * g.dim
        v[i] = 1
        vecs.append(v)
    for r in sorted(subset):
        v = [0] * g.dim
        v[root_vector_index(g, r)] = 1
        vecs.append(v)
    par = g.subspace(vecs)
    nil_vecs = []
    for r in nilroots:
        v = [0] * g.dim
        v[root_vector_index(g, r)] = 1
        nil_vecs.append(v)
    levi_vecs = list(vecs[:len(g.frame.torus_indices)])
    for r in sorted(sym):
        v = [0] * g.dim
        v[root_vector_index(g, r)] = 1
        levi_vecs.append(v)
    return {
        "roots": tuple(sorted(subset)),
        "parabolic": par,
        "nilradical": g.subspace(nil_vecs),
        "levi": g.subspace(levi_vecs),
        "simples": chosen,
    }


def standard_borel(g: LieAlgebra) -> dict:
    return standard_parabolic(g, ())


def weyl_matrices(g: LieAlgebra) -> list:
    """Representatives of the Weyl group as realization matrices
    (permutations for type A; signed block permutations for sp)."""
    p = g.p
    fam = g.frame.family
    n = g.frame.n
    out = []
    if fam in ("gl", "sl", "pgl"):
        for perm in permutations(range(n)):
            entries = [0] * (n * n)
            for i, pi in enumerate(perm):
                entries[pi * n + i] = 1
            out.append(FieldMatrix(n, n, p, entries))
        return out
    if fam == "sp":
        # signed permutations; flip i swaps e_i <-> f_i with a sign
        for perm in permutations(range(n)):
            for flips in range(1 << n):
                entries = [0] * (2 * n) ** 2
                N = 2 * n
                ok = True
                for i, pi in enumerate(perm):
                    if flips >> i & 1:
                        entries[(n + pi) * N + i] = 1
                        entries[pi * N + (n + i)] = p - 1
                    else:
                        entries[pi * N + i] = 1
                        entries[(n + pi) * N + (n + i)] = 1
                out.append(FieldMatrix(N, N, p, entries))
        return out
    raise ValueError(f"no Weyl frame for family {fam}")


def conjugate_subspace(g: LieAlgebra, w: FieldMatrix, s: Subspace) -> Subspace:
    """Image of a subspace under conjugation by an invertible realization
    matrix (must normalize the algebra, e.g. a Weyl representative)."""
    n = g.realization.n
    winv = _matrix_inverse(w)
    vecs = []
    for v in s.basis:
        m = g.matrix_of(list(v))
        vecs.append(g.coordinates_of_matrix(w @ m @ winv))
    return g.subspace(vecs)


def _matrix_inverse(m: FieldMatrix) -> FieldMatrix:
    n = m.rows
    p = m.p
    aug = [list(m.row(i)) + [1 if j == i else 0 for j in range(n)] for i in range(n)]
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, n) if aug[i][c] % p), None)
        if piv is None:
            raise ValueError("singular matrix")
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = inv_mod(aug[r][c], p)
        aug[r] = [(x * inv) % p for x in aug[r]]
        for i in range(n):
            if i != r and aug[i][c] % p:
                f = aug[i][c]
                aug[i] = [(x - f * y) % p for x, y in zip(aug[i], aug[r])]
        r += 1
    return FieldMatrix.from_rows([row[n:] for row in aug], p)
