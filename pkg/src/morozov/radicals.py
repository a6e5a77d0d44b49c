"""Solvable radical, nilradical, p-radical and p-nilpotency testing.

The public operations take an ambient realized algebra and a subspace and
return subspaces in ambient coordinates.  Internally everything runs on
lightweight views (subalgebras and quotients as structure-constant
algebras), so the abelian-ideal peeling recursion can cross quotients.

Strategy notes:
  * an abelian ideal of h is always isotropic for h's own Killing form, so
    ker(kappa_h) = 0 certifies that no abelian ideal exists;
  * (ad v)^2 = 0 is necessary for v to lie in an abelian ideal, which makes
    the line scan over ker(kappa_h) a complete search;
  * for torus-stable inputs the p-nilpotent and ad-nilpotent cones split
    along coordinates (root support in a positive system), avoiding
    enumeration entirely ("structured" method);
  * enumeration with an explicit budget is the general fallback, and
    exceeding the budget is an Undetermined outcome, never a guess.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .gfp import FieldMatrix, Subspace, kernel, rref
from .liealg import Element, LieAlgebra

DEFAULT_BUDGET = 10 ** 7
SCAN_BUDGET = 4_000_000


class Undetermined(Exception):
    """Raised when a computation cannot be certified within its budget."""


# ---------------------------------------------------------------------------
# Views: subalgebras and quotients as structure-constant algebras
# ---------------------------------------------------------------------------

class View:
    """A finite-dimensional Lie algebra in local coordinates with an
    optional p-power map; local vectors are plain int lists."""

    p: int
    dim: int

    def bracket_vec(self, x, y):
        raise NotImplementedError

    def p_power_vec(self, x):
        """Local p-power, or None when it leaves the carrier."""
        raise NotImplementedError

    # generic helpers ----------------------------------------------------

    def unit(self, i):
        u = [0] * self.dim
        u[i] = 1
        return u

    def ad_matrix_vec(self, x) -> FieldMatrix:
        cols = [self.bracket_vec(x, self.unit(j)) for j in range(self.dim)]
        flat = [cols[j][i] for i in range(self.dim) for j in range(self.dim)]
        return FieldMatrix(self.dim, self.dim, self.p, flat)

    def full(self) -> Subspace:
        return Subspace.full(self.dim, self.p)

    def bracket_spaces(self, a: Subspace, b: Subspace) -> Subspace:
        vecs = [self.bracket_vec(list(x), list(y)) for x in a.basis for y in b.basis]
        return Subspace.from_vectors(vecs, self.dim, self.p)

    def derived_series(self, u: Subspace) -> list:
        out = [u]
        while out[-1].dim:
            nxt = self.bracket_spaces(out[-1], out[-1])
            out.append(nxt)
            if nxt.dim == out[-2].dim:
                break
        return out

    def lower_central_series(self, u: Subspace) -> list:
        out = [u]
        while out[-1].dim:
            nxt = self.bracket_spaces(u, out[-1])
            out.append(nxt)
            if nxt.dim == out[-2].dim:
                break
        return out

    def is_solvable(self, u: Subspace) -> bool:
        return self.derived_series(u)[-1].dim == 0

    def is_nilpotent(self, u: Subspace) -> bool:
        return self.lower_central_series(u)[-1].dim == 0

    def center(self) -> Subspace:
        if self.dim == 0:
            return Subspace.zero(0, self.p)
        rows = []
        for i in range(self.dim):
            ad = self.ad_matrix_vec(self.unit(i))
            rows.extend(ad.to_rows())
        return kernel(FieldMatrix.from_rows(rows, self.p))

    def killing_gram(self) -> FieldMatrix:
        ads = [self.ad_matrix_vec(self.unit(i)) for i in range(self.dim)]
        entries = []
        for i in range(self.dim):
            for j in range(self.dim):
                entries.append((ads[i] @ ads[j]).trace())
        return FieldMatrix(self.dim, self.dim, self.p, entries)

    def killing_kernel(self) -> Subspace:
        if self.dim == 0:
            return Subspace.zero(0, self.p)
        return kernel(self.killing_gram())

    def spin_submodule(self, v) -> Subspace:
        """Smallest subspace containing v and stable under all ad(e_i):
        the ideal closure of the line through v."""
        span = Subspace.from_vectors([v], self.dim, self.p)
        while True:
            vecs = list(span.basis)
            for i in range(self.dim):
                for b in span.basis:
                    vecs.append(self.bracket_vec(self.unit(i), list(b)))
            grown = Subspace.from_vectors(vecs, self.dim, self.p)
            if grown.dim == span.dim:
                return span
            span = grown

    def largest_ideal_inside(self, v: Subspace) -> Subspace:
        w = v
        while w.dim:
            cols = []
            for r in range(w.dim):
                col = []
                for i in range(self.dim):
                    col.extend(w.reduce_vector(
                        self.bracket_vec(self.unit(i), list(w.basis[r]))))
                cols.append(col)
            height = len(cols[0])
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


class AmbientView(View):
    def __init__(self, g: LieAlgebra):
        self.g = g
        self.p = g.p
        self.dim = g.dim

    def bracket_vec(self, x, y):
        return self.g.bracket_vec(x, y)

    def p_power_vec(self, x):
        return self.g.p_power_vec(x)


class SubView(View):
    """A bracket-closed subspace of a parent view, in its own coordinates."""

    def __init__(self, parent: View, sub: Subspace):
        self.parent = parent
        self.sub = sub
        self.p = parent.p
        self.dim = sub.dim

    def lift(self, x) -> list:
        vec = [0] * self.sub.ambient_dim
        for c, row in zip(x, self.sub.basis):
            if c:
                for i in range(self.sub.ambient_dim):
                    vec[i] = (vec[i] + c * row[i]) % self.p
        return vec

    def restrict(self, vec) -> list:
        coords = self.sub.coordinates_of(vec)
        if coords is None:
            raise ValueError("vector escapes the subalgebra")
        return coords

    def lift_subspace(self, s: Subspace) -> Subspace:
        return Subspace.from_vectors([self.lift(list(b)) for b in s.basis],
                                     self.sub.ambient_dim, self.p)

    def restrict_subspace(self, s: Subspace) -> Subspace:
        return Subspace.from_vectors([self.restrict(list(b)) for b in s.basis],
                                     self.dim, self.p)

    def bracket_vec(self, x, y):
        return self.restrict(self.parent.bracket_vec(self.lift(x), self.lift(y)))

    def p_power_vec(self, x):
        up = self.parent.p_power_vec(self.lift(x))
        if up is None:
            return None
        return self.sub.coordinates_of(up)


class QuotientView(View):
    """Quotient of a parent view by an ideal, coordinatized by the
    non-pivot positions of the ideal's canonical basis."""

    def __init__(self, parent: View, ideal: Subspace):
        self.parent = parent
        self.ideal = ideal
        self.p = parent.p
        pivots = [next(j for j, x in enumerate(row) if x) for row in ideal.basis]
        self.sections = [j for j in range(parent.dim) if j not in set(pivots)]
        self.dim = len(self.sections)

    def lift(self, x) -> list:
        vec = [0] * self.parent.dim
        for c, j in zip(x, self.sections):
            vec[j] = c % self.p
        return vec

    def project(self, vec) -> list:
        red = self.ideal.reduce_vector(vec)
        return [red[j] for j in self.sections]

    def project_subspace(self, s: Subspace) -> Subspace:
        return Subspace.from_vectors([self.project(list(b)) for b in s.basis],
                                     self.dim, self.p)

    def preimage(self, s: Subspace) -> Subspace:
        vecs = [self.lift(list(b)) for b in s.basis] + [list(b) for b in self.ideal.basis]
        return Subspace.from_vectors(vecs, self.parent.dim, self.p)

    def bracket_vec(self, x, y):
        return self.project(self.parent.bracket_vec(self.lift(x), self.lift(y)))

    def p_power_vec(self, x):
        up = self.parent.p_power_vec(self.lift(x))
        if up is None:
            return None
        return self.project(up)


# ---------------------------------------------------------------------------
# p-nilpotency
# ---------------------------------------------------------------------------

def is_p_nilpotent(x: Element) -> bool:
    """x^[p]^m = 0 for some m <= dim."""
    cur = x
    for _ in range(x.algebra.dim + 1):
        if cur.is_zero():
            return True
        cur = cur.p_power()
    return cur.is_zero()


def _vec_p_nilpotent(view: View, x) -> Optional[bool]:
    cur = list(x)
    for _ in range(view.dim + 1):
        if not any(cur):
            return True
        cur = view.p_power_vec(cur)
        if cur is None:
            return None
    return not any(cur)


# ---------------------------------------------------------------------------
# Abelian ideals and the solvable radical
# ---------------------------------------------------------------------------

def _abelian_spin_scan(view: View, region: Subspace, budget: int):
    """Complete scan for abelian ideals meeting `region` (which must
    contain every abelian ideal): spin all lines with (ad v)^2 = 0."""
    if region.dim == 0:
        return None
    if view.p ** region.dim > budget:
        raise Undetermined(
            f"abelian-ideal scan needs {view.p ** region.dim} vectors, over budget {budget}")
    import numpy as np

    from .bulk import bracket_tensor, square_zero_lines
    c = bracket_tensor(view)
    basis = np.array([list(b) for b in region.basis], dtype=np.int64)
    best = None
    for v in square_zero_lines(c, view.p, basis, max_vectors=budget):
        spun = view.spin_submodule(v)
        if view.bracket_spaces(spun, spun).dim == 0:
            if best is None or spun.dim < best.dim:
                best = spun
                if best.dim == 1:
                    break
    return best


def _centralizer_within(view: View, c: Subspace) -> Subspace:
    """{x in c : [x, c] = 0}; for an ideal c this is an abelian ideal of
    the whole view."""
    if c.dim == 0:
        return c
    cols = []
    for r in range(c.dim):
        col = []
        for b in c.basis:
            col.extend(view.bracket_vec(list(c.basis[r]), list(b)))
        cols.append(col)
    height = len(cols[0])
    mat = FieldMatrix.from_rows(
        [[cols[r][t] for r in range(c.dim)] for t in range(height)], view.p)
    ker = kernel(mat)
    vecs = []
    for coeffs in ker.basis:
        vec = [0] * view.dim
        for co, b in zip(coeffs, c.basis):
            if co:
                for i in range(view.dim):
                    vec[i] = (vec[i] + co * b[i]) % view.p
        vecs.append(vec)
    return Subspace.from_vectors(vecs, view.dim, view.p)


def _gram_orthogonal(view: View, s: Subspace, gram: FieldMatrix) -> Subspace:
    if s.dim == 0:
        return view.full()
    rows = []
    for v in s.basis:
        rows.append([sum(v[i] * gram.entries[i * view.dim + j]
                         for i in range(view.dim)) % view.p
                     for j in range(view.dim)])
    return kernel(FieldMatrix.from_rows(rows, view.p))


def _find_solvable_ideal(view: View, budget: int):
    """A nonzero solvable ideal of the view, or None certified to mean the
    solvable radical is zero.

    Cheap certified constructions first (center; Killing kernel; the
    Cartan-style ideal orthogonal to [h,h]; centralizers and derived /
    lower-central limits of ideals already found), then the complete
    quadratic-cone scan of ker(kappa) as a last resort."""
    z = view.center()
    if z.dim:
        return z
    gram = view.killing_gram()
    k = kernel(gram)
    if k.dim == 0:
        # every abelian ideal is kappa-isotropic; no abelian ideal means a
        # zero solvable radical
        return None
    derived = view.bracket_spaces(view.full(), view.full())
    d = _gram_orthogonal(view, derived, gram)
    worklist = [k, d, k.intersect(d)]
    seen = set()
    rounds = 0
    while worklist and rounds < 64:
        rounds += 1
        c = worklist.pop(0)
        if c.dim == 0 or c.basis in seen:
            continue
        seen.add(c.basis)
        if view.is_solvable(c):
            return c
        zc = _centralizer_within(view, c)
        if zc.dim:
            return zc
        worklist.append(view.bracket_spaces(c, c))
        worklist.append(view.lower_central_series(c)[-1])
        worklist.append(c.intersect(k))
    a = _abelian_spin_scan(view, k, budget)
    return a


def minimal_abelian_ideal_view(view: View, budget: int = SCAN_BUDGET):
    """A nonzero abelian ideal of the view, or None iff none exists."""
    if view.dim == 0:
        return None
    s = _find_solvable_ideal(view, budget)
    if s is None:
        return None
    if view.bracket_spaces(s, s).dim == 0:
        return s
    # the last nonzero derived term of a solvable ideal is an abelian
    # ideal of the whole view
    series = view.derived_series(s)
    return next(t for t in reversed(series) if t.dim)


def _solvable_radical_view(view: View, budget: int) -> Subspace:
    if view.dim == 0:
        return view.full()
    if view.is_solvable(view.full()):
        return view.full()
    s = _find_solvable_ideal(view, budget)
    if s is None:
        return Subspace.zero(view.dim, view.p)
    quot = QuotientView(view, s)
    r = _solvable_radical_view(quot, budget)
    return quot.preimage(r)


def _distinct_torus_characters(g: LieAlgebra, roots) -> bool:
    """Whether the root characters on the finite torus T(F_p) are pairwise
    distinct and nontrivial: chi_a = chi_b iff a = b mod (p-1)."""
    m = g.p - 1
    items = [tuple(r) for r in roots] + [tuple([0] * g.frame.cochar_rank)]
    reduced = [tuple(x % m for x in r) for r in items]
    return len(set(reduced)) == len(items)


def _structured_solvable_radical(g: LieAlgebra, h: Subspace) -> Optional[Subspace]:
    """rad(h) for a coordinate-split h whose torus characters are pairwise
    distinct: every ideal of h is then coordinate-split (finite-torus
    Fourier projections), so the radical is the sum of the solvable
    spin-ideals of the coordinate directions of h."""
    split = _coordinate_split(g, h)
    if split is None:
        return None
    roots = [root for root, _ in split.root_lines]
    if not _distinct_torus_characters(g, roots):
        return None
    if split.torus_part.dim and g.p ** split.torus_part.dim > 10 ** 6:
        return None
    view = SubView(AmbientView(g), h)
    zero = Subspace.zero(g.dim, g.p)
    spins = {}
    for root, idx in split.root_lines:
        v = [0] * g.dim
        v[idx] = 1
        spins[root] = view.spin_submodule(view.restrict(v))
    total = zero
    solvable_cache = {}

    def union_solvable(rootset) -> bool:
        key = frozenset(rootset)
        if key not in solvable_cache:
            span = Subspace.zero(view.dim, g.p)
            for r in key:
                span = span.sum(spins[r])
            solvable_cache[key] = view.is_solvable(span)
        return solvable_cache[key]

    for root, _ in split.root_lines:
        if union_solvable([root]):
            total = total.sum(view.lift_subspace(spins[root]))
    # torus directions: spin(z) = <z> + sum of spins over the root lines z
    # does not kill, and the extra central line never affects solvability
    if split.torus_part.dim:
        for z in split.torus_part.enumerate_vectors():
            if not any(z):
                continue
            support = []
            for root, idx in split.root_lines:
                unit = [0] * g.dim
                unit[idx] = 1
                if any(g.bracket_vec(list(z), unit)):
                    support.append(root)
            if union_solvable(support):
                total = total.sum(g.subspace([z]))
    return total


def solvable_radical(g: LieAlgebra, h: Subspace, budget: int = SCAN_BUDGET) -> Subspace:
    """Maximal solvable ideal of the subalgebra h, in ambient coordinates."""
    key = ("rad", h.basis, budget)
    if key in g._memo:
        return g._memo[key]
    if not g.is_subalgebra(h):
        raise ValueError("input is not a subalgebra")
    if g.frame is not None:
        structured = _structured_solvable_radical(g, h)
        if structured is not None:
            g._memo[key] = structured
            return structured
    view = SubView(AmbientView(g), h)
    local = _solvable_radical_view(view, budget)
    out = view.lift_subspace(local)
    g._memo[key] = out
    return out


def minimal_abelian_ideal(g: LieAlgebra, h: Subspace,
                          budget: int = SCAN_BUDGET) -> Optional[Subspace]:
    view = SubView(AmbientView(g), h)
    local = minimal_abelian_ideal_view(view, budget)
    return None if local is None else view.lift_subspace(local)


# ---------------------------------------------------------------------------
# Structured (torus-stable) cone extraction
# ---------------------------------------------------------------------------

@dataclass
class _SplitData:
    torus_part: Subspace
    root_lines: list          # list of (root, ambient index)


def _coordinate_split(g: LieAlgebra, r: Subspace) -> Optional[_SplitData]:
    """Decompose r along the torus block and individual root lines;
    None if r is not a coordinate subspace in the torus frame."""
    if g.frame is None:
        return None
    torus = [0] * g.dim
    tvecs = []
    for i in g.frame.torus_indices:
        v = [0] * g.dim
        v[i] = 1
        tvecs.append(v)
    tspan = g.subspace(tvecs)
    tpart = r.intersect(tspan)
    lines = []
    total = tpart.dim
    for idx, root in g.frame.index_root.items():
        v = [0] * g.dim
        v[idx] = 1
        if r.contains_vector(v):
            lines.append((root, idx))
            total += 1
    if total != r.dim:
        return None
    return _SplitData(tpart, lines)


def _positive_systems(rd) -> list:
    """All positive systems of the root datum (Weyl images of the standard
    one), generated by simple reflections."""
    simples = [list(s) for s in rd.simple_roots]

    def pairing(beta, alpha):
        # <beta, alpha^vee> = 2 (beta, alpha) / (alpha, alpha)
        num = 2 * sum(a * b for a, b in zip(beta, alpha))
        den = sum(a * a for a in alpha)
        assert num % den == 0
        return num // den

    def reflect(beta, alpha):
        c = pairing(beta, alpha)
        return tuple(b - c * a for b, a in zip(beta, alpha))

    start = frozenset(rd.positive_roots)
    seen = {start}
    frontier = [start]
    while frontier:
        cur = frontier.pop()
        for alpha in simples:
            img = frozenset(reflect(list(b), alpha) for b in cur)
            if img not in seen:
                seen.add(img)
                frontier.append(img)
    return list(seen)


def _support_in_positive_system(g: LieAlgebra, roots) -> bool:
    rd = g.frame.rootdatum
    roots = set(roots)
    key = ("possys",)
    if key not in g._memo:
        g._memo[key] = _positive_systems(rd)
    return any(roots <= ps for ps in g._memo[key])


def _structured_pnil_cone(g: LieAlgebra, r: Subspace) -> Optional[Subspace]:
    """The set of p-nilpotent elements of a torus-stable solvable r, when
    certifiable: the root part, provided the root support is closed,
    asymmetric, and lies in a positive system (then elements with nonzero
    torus component keep it under p-powers, and the root part consists of
    nilpotent matrices)."""
    from .rootdata import is_closed
    split = _coordinate_split(g, r)
    if split is None:
        return None
    roots = [root for root, _ in split.root_lines]
    rootset = set(roots)
    if any(tuple(-x for x in rt) in rootset for rt in rootset):
        return None
    if not is_closed(g.frame.rootdatum, roots):
        return None
    if not _support_in_positive_system(g, roots):
        return None
    vecs = []
    for _, idx in split.root_lines:
        v = [0] * g.dim
        v[idx] = 1
        vecs.append(v)
    return g.subspace(vecs)


def _structured_adnil_cone(g: LieAlgebra, h: Subspace, r: Subspace) -> Optional[Subspace]:
    """Elements of torus-stable solvable r acting nilpotently on the
    coordinate-split subalgebra h: torus part killing every root line of h
    plus the whole root part of r."""
    split_r = _coordinate_split(g, r)
    split_h = _coordinate_split(g, h)
    if split_r is None or split_h is None:
        return None
    roots = [root for root, _ in split_r.root_lines]
    rootset = set(roots)
    if any(tuple(-x for x in rt) in rootset for rt in rootset):
        return None
    from .rootdata import is_closed
    if not is_closed(g.frame.rootdatum, roots):
        return None
    if not _support_in_positive_system(g, roots):
        return None
    # torus part: [z, e_beta] = 0 for every root line of h
    if split_r.torus_part.dim:
        rows = []
        for _, idx in split_h.root_lines:
            unit = [0] * g.dim
            unit[idx] = 1
            for b in split_r.torus_part.basis:
                rows.append(g.bracket_vec(list(b), unit))
        if rows:
            # solve for combinations of the torus basis vanishing on all lines
            cols = []
            for b in split_r.torus_part.basis:
                col = []
                for _, idx in split_h.root_lines:
                    unit = [0] * g.dim
                    unit[idx] = 1
                    col.extend(g.bracket_vec(list(b), unit))
                cols.append(col)
            height = len(cols[0])
            mat = FieldMatrix.from_rows(
                [[cols[r_][t] for r_ in range(split_r.torus_part.dim)]
                 for t in range(height)], g.p)
            ker = kernel(mat)
            zvecs = []
            for coeffs in ker.basis:
                vec = [0] * g.dim
                for c, b in zip(coeffs, split_r.torus_part.basis):
                    if c:
                        for i in range(g.dim):
                            vec[i] = (vec[i] + c * b[i]) % g.p
                zvecs.append(vec)
        else:
            zvecs = [list(b) for b in split_r.torus_part.basis]
    else:
        zvecs = []
    vecs = list(zvecs)
    for _, idx in split_r.root_lines:
        v = [0] * g.dim
        v[idx] = 1
        vecs.append(v)
    return g.subspace(vecs)


# ---------------------------------------------------------------------------
# Nilradical and p-radical
# ---------------------------------------------------------------------------

def _enumerate_cone(g: LieAlgebra, h: Subspace, r: Subspace, kind: str,
                    budget: int) -> tuple:
    """(cone vectors, is_subspace) by exhaustive enumeration of r."""
    if g.p ** r.dim > budget:
        raise Undetermined(
            f"enumeration of {g.p ** r.dim} elements exceeds budget {budget}")
    members = []
    for v in r.enumerate_vectors():
        if not any(v):
            continue
        if kind == "pnil":
            ok = is_p_nilpotent(g.element(v))
        else:
            sub = SubView(AmbientView(g), h)
            loc = h.coordinates_of(v)
            ok = sub.ad_matrix_vec(loc).is_nilpotent()
        if ok:
            members.append(v)
    span = Subspace.from_vectors(members, g.dim, g.p)
    is_subspace = (len(members) + 1 == g.p ** span.dim)
    return members, span, is_subspace


def pnil_part_of_radical(g: LieAlgebra, h: Subspace,
                         budget: int = DEFAULT_BUDGET) -> dict:
    """The set of p-nilpotent elements of rad(h): span, subspace flag and
    method; the tower consumes this directly."""
    key = ("pnilpart", h.basis, budget)
    if key in g._memo:
        return g._memo[key]
    r = solvable_radical(g, h)
    cone = _structured_pnil_cone(g, r)
    if cone is not None:
        out = {"span": cone, "cone_is_subspace": True, "method": "structured",
               "radical": r}
    else:
        members, span, is_sub = _enumerate_cone(g, h, r, "pnil", budget)
        out = {"span": span, "cone_is_subspace": is_sub, "method": "enumeration",
               "radical": r}
    g._memo[key] = out
    return out


def p_radical(g: LieAlgebra, h: Subspace, budget: int = DEFAULT_BUDGET) -> dict:
    """Maximal p-nil ideal of h: refine the p-nilpotent cone of rad(h) by
    the largest-ideal fixed point until every element is p-nilpotent."""
    part = pnil_part_of_radical(g, h, budget)
    view = SubView(AmbientView(g), h)
    span = part["span"]
    cone_flag = part["cone_is_subspace"]
    method = part["method"]
    while True:
        local = view.largest_ideal_inside(view.restrict_subspace(span))
        cand = view.lift_subspace(local)
        if method == "structured":
            # cand sits inside the certified cone: all p-nilpotent
            break
        bad = []
        if g.p ** cand.dim > budget:
            raise Undetermined("p-radical verification exceeds budget")
        good = []
        for v in cand.enumerate_vectors():
            if any(v):
                (good if is_p_nilpotent(g.element(v)) else bad).append(v)
        if not bad:
            break
        span = Subspace.from_vectors(good, g.dim, g.p)
    p_closed = all(
        cand.contains_vector(g.p_power_vec(list(b))) for b in cand.basis)
    return {"rad_p": cand, "cone_is_subspace": cone_flag, "method": method,
            "p_closed": p_closed, "radical": part["radical"]}


def nilradical(g: LieAlgebra, h: Subspace, budget: int = DEFAULT_BUDGET) -> dict:
    """Maximal nilpotent ideal of h."""
    r = solvable_radical(g, h)
    view = SubView(AmbientView(g), h)
    cone = _structured_adnil_cone(g, h, r)
    method = "structured"
    if cone is None:
        method = "enumeration"
        members, cone, is_sub = _enumerate_cone(g, h, r, "adnil", budget)
    local = view.largest_ideal_inside(view.restrict_subspace(cone))
    cand = view.lift_subspace(local)
    if not view.is_nilpotent(local):
        raise Undetermined("largest ideal inside the ad-nilpotent cone is "
                           "not nilpotent; nilradical undecided")
    return {"nil": cand, "method": method, "radical": r}


@dataclass
class RadicalReport:
    rad: Subspace
    nil: Optional[Subspace]
    rad_p: Optional[Subspace]
    p_nilpotent_cone_is_subspace: Optional[bool]
    method_used: str
    p_closed: Optional[bool] = None
    status: str = "ok"
    detail: str = ""

    def as_dict(self) -> dict:
        def sub(s):
            return None if s is None else [list(r) for r in s.basis]
        return {
            "rad": sub(self.rad), "nil": sub(self.nil), "rad_p": sub(self.rad_p),
            "p_nilpotent_cone_is_subspace": self.p_nilpotent_cone_is_subspace,
            "method_used": self.method_used, "p_closed": self.p_closed,
            "status": self.status, "detail": self.detail,
        }


def radical_report(g: LieAlgebra, h: Subspace,
                   budget: int = DEFAULT_BUDGET) -> RadicalReport:
    rad = solvable_radical(g, h)
    nil = rad_p = cone_flag = p_closed = None
    method = "structured"
    status, detail = "ok", ""
    try:
        nil_out = nilradical(g, h, budget)
        nil = nil_out["nil"]
        prad_out = p_radical(g, h, budget)
        rad_p = prad_out["rad_p"]
        cone_flag = prad_out["cone_is_subspace"]
        p_closed = prad_out["p_closed"]
        method = prad_out["method"]
    except Undetermined as exc:
        status, detail = "undetermined", str(exc)
        method = "enumeration"
    return RadicalReport(rad, nil, rad_p, cone_flag, method, p_closed,
                         status, detail)
