"""Parabolic-subalgebra detection, Cartan subalgebra search, and the
Killing-form detector.

A "parabolic" verdict always carries a witness (torus, root subset) with
the subalgebra rebuilt exactly as torus + root spaces over a closed subset
Phi' with Phi' u -Phi' = Phi.  A "not-parabolic" verdict is certified by
a battery of extension-stable isomorphism invariants that separates the
input from every standard parabolic of matching dimension (conjugation
over the algebraic closure preserves each of them).  Anything else is
"undetermined" - never a false negative.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Optional

from .gfp import Subspace, rref
from .liealg import (LieAlgebra, conjugate_subspace, standard_borel,
                     standard_parabolic, torus_subspace, weyl_matrices)
from .radicals import AmbientView, SubView
from .rootdata import is_closed


@dataclass
class ParabolicVerdict:
    status: str                        # parabolic | not-parabolic | undetermined
    torus_used: Optional[Subspace] = None
    root_subset: Optional[tuple] = None
    failure_reason: Optional[str] = None
    details: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {
            "status": self.status,
            "torus_used": None if self.torus_used is None
            else [list(r) for r in self.torus_used.basis],
            "root_subset": None if self.root_subset is None
            else [list(r) for r in self.root_subset],
            "failure_reason": self.failure_reason,
            "details": self.details,
        }


def cartan_subalgebra(g: LieAlgebra, seed: int = 0, attempts: int = 200) -> Subspace:
    """Fitting null component of ad(x) for random x, retried until the
    result is a nilpotent self-normalizing subalgebra; the seed makes the
    search replayable."""
    rng = random.Random(seed)
    for _ in range(attempts):
        x = [rng.randrange(g.p) for _ in range(g.dim)]
        if not any(x):
            continue
        ad = g.ad_matrix_vec(x)
        power = ad.pow(g.dim)
        from .gfp import kernel
        fit = kernel(power)
        if fit.dim == 0:
            continue
        if not g.is_subalgebra(fit):
            continue
        if not g.is_nilpotent(fit):
            continue
        if g.normalizer(fit) != fit:
            continue
        return fit
    raise ValueError(f"no Cartan subalgebra found in {attempts} attempts (seed {seed})")


def _coordinate_analysis(g: LieAlgebra, q: Subspace) -> Optional[dict]:
    """Split q along the standard frame: torus part + root lines.  None if
    q is not a coordinate subspace containing the full torus."""
    t = torus_subspace(g)
    if not q.contains(t):
        return None
    lines = []
    for idx, root in g.frame.index_root.items():
        v = [0] * g.dim
        v[idx] = 1
        if q.contains_vector(v):
            lines.append(root)
    if t.dim + len(lines) != q.dim:
        return None
    return {"torus": t, "roots": tuple(sorted(lines))}


def iso_invariants(g: LieAlgebra, q: Subspace) -> tuple:
    """Extension-stable invariants of the subalgebra (dimension data of
    canonical constructions plus ambient normalizer/centralizer)."""
    view = SubView(AmbientView(g), q)
    derived = tuple(s.dim for s in view.derived_series(view.full()))
    lcs = tuple(s.dim for s in view.lower_central_series(view.full()))
    return (
        q.dim,
        derived,
        lcs,
        view.center().dim,
        rref(view.killing_gram())[1],
        g.normalizer(q).dim,
        g.centralizer(q).dim,
    )


def _standard_parabolic_invariants(g: LieAlgebra) -> list:
    key = ("std-parab-inv",)
    if key not in g._memo:
        out = []
        rank = g.frame.rootdatum.rank
        for mask in range(1 << rank):
            chosen = tuple(i for i in range(rank) if mask >> i & 1)
            data = standard_parabolic(g, chosen)
            out.append((chosen, data["parabolic"],
                        iso_invariants(g, data["parabolic"])))
        g._memo[key] = out
    return g._memo[key]


def contains_borel(g: LieAlgebra, q: Subspace):
    """Search the Weyl-translate frame for a Borel inside q; returns the
    translating matrix or None.  The frame covers permutation conjugates
    (type A) and signed block permutations (type C)."""
    b = standard_borel(g)["parabolic"]
    for w in weyl_matrices(g):
        if q.contains(conjugate_subspace(g, w, b)):
            return w
    return None


def detect_parabolic(g: LieAlgebra, q: Subspace) -> ParabolicVerdict:
    if g.frame is None:
        return ParabolicVerdict("undetermined", failure_reason="no-torus-found",
                                details={"note": "algebra has no torus frame"})
    if not g.is_subalgebra(q):
        raise ValueError("input is not a subalgebra")
    rd = g.frame.rootdatum
    allroots = set(rd.roots)

    def finish_coordinate(analysis, extra):
        roots = analysis["roots"]
        closed = is_closed(rd, roots)
        symmetric = {tuple(-x for x in r) for r in roots} | set(roots) == allroots
        if closed and symmetric:
            details = {"criterion": "torus + closed root subset with "
                                    "Phi' u -Phi' = Phi"}
            details.update(extra)
            return ParabolicVerdict("parabolic", analysis["torus"], roots,
                                    details=details)
        reason = "not-closed" if not closed else "not-parabolic-subset"
        return ParabolicVerdict("candidate-failed", analysis["torus"], roots,
                                failure_reason=reason, details=extra)

    analysis = _coordinate_analysis(g, q)
    if analysis is not None:
        verdict = finish_coordinate(analysis, {})
        if verdict.status == "parabolic":
            return verdict
        # coordinate subset fails the parabolic-subset conditions;
        # fall through to the invariant battery for a certificate
        partial = verdict
    else:
        partial = None

    # Borel-containment shortcut (valid characterisation away from 2 and 3)
    if g.p not in (2, 3):
        w = contains_borel(g, q)
        if w is not None:
            from .liealg import _matrix_inverse
            back = conjugate_subspace(g, _matrix_inverse(w), q)
            analysis = _coordinate_analysis(g, back)
            if analysis is not None:
                verdict = finish_coordinate(
                    analysis, {"frame_translate": True})
                if verdict.status == "parabolic":
                    return verdict

    # invariant battery against every standard parabolic of equal dimension
    inv = iso_invariants(g, q)
    matches = [chosen for chosen, par, pinv in _standard_parabolic_invariants(g)
               if pinv == inv]
    details = {"invariants": repr(inv), "matching_standard_parabolics": matches}
    if partial is not None:
        details["coordinate_failure"] = partial.failure_reason
    if not matches:
        return ParabolicVerdict(
            "not-parabolic",
            failure_reason=(partial.failure_reason if partial is not None
                            else "not-parabolic-subset"),
            details=details)
    return ParabolicVerdict("undetermined",
                            failure_reason="no-torus-found", details=details)


def killing_detector(g: LieAlgebra, p_cand: Subspace) -> dict:
    """Corollary-style detector: if the Killing orthogonal of p_cand is a
    nilpotent subalgebra then p_cand must be parabolic; asserts and
    cross-checks p_cand = N_g(p_cand^perp)."""
    if not g.killing_nondegenerate():
        raise ValueError("ambient Killing form is degenerate")
    perp = g.orthogonal(p_cand)
    out: dict = {"perp_dim": perp.dim}
    out["perp_is_subalgebra"] = g.is_subalgebra(perp)
    if not out["perp_is_subalgebra"]:
        out["status"] = "precondition-failed"
        out["reason"] = "orthogonal is not a subalgebra"
        return out
    out["perp_is_nilpotent"] = g.is_nilpotent(perp)
    if not out["perp_is_nilpotent"]:
        out["status"] = "precondition-failed"
        out["reason"] = "orthogonal is not nilpotent"
        return out
    verdict = detect_parabolic(g, p_cand)
    out["detect_status"] = verdict.status
    out["normalizer_check"] = (g.normalizer(perp) == p_cand)
    out["status"] = ("ok" if verdict.status == "parabolic"
                     and out["normalizer_check"] else "mismatch")
    return out
