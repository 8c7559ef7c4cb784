"""Structural analysis of a tiling: vertex census, link graphs, segment
relations and the side-commensurability verdict.

Everything here reads a built ``Tiling`` and never modifies it.  Angle
bookkeeping is exact; positions along a line are compared with the
tiling's own tolerance.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .errors import ClassificationError, InconsistentRelations
from .exact import LABELS, AngleMeasure, AngleMode, SymLen
from .model import _covers, _union, boundary_walk

# (n_alpha, n_beta, n_gamma) -> vertex type
VERTEX_TYPES = {
    (1, 1, 1): "simple",
    (3, 3, 0): "star",
    (0, 0, 3): "center",
    (6, 6, 0): "double_star",
    (4, 4, 1): "gamma_star",
    (2, 2, 2): "double_simple",
}
TYPE_NAMES = ("simple", "star", "center", "double_star", "gamma_star", "double_simple", "other")


def contribution(counts):
    """#alpha + #beta - 2 #gamma for a wedge count triple."""
    na, nb, ng = counts
    return na + nb - 2 * ng


TYPE_CONTRIB = {name: contribution(c) for c, name in VERTEX_TYPES.items()}


# ---------------------------------------------------------------------------
# vertex census


@dataclass
class VertexCensus:
    counts: dict
    N_alpha: int
    N_beta: int
    N_gamma: int
    N: int
    types: dict = field(default_factory=dict)     # vertex id -> type name
    corners: list = field(default_factory=list)   # region corner vertex ids
    corner_contrib: int = 0
    other_contrib: int = 0

    @property
    def S(self):
        return self.counts["star"] + self.counts["gamma_star"]

    @property
    def S2(self):
        return self.counts["double_star"]

    @property
    def C(self):
        return self.counts["center"]

    @property
    def totals_consistent(self):
        return self.N_alpha == self.N_beta == self.N_gamma == self.N

    def as_dict(self):
        return {
            "counts": dict(self.counts),
            "N_alpha": self.N_alpha, "N_beta": self.N_beta, "N_gamma": self.N_gamma,
            "N": self.N, "S": self.S, "S2": self.S2, "C": self.C,
            "corner_contrib": self.corner_contrib, "other_contrib": self.other_contrib,
            "types": {str(k): v for k, v in sorted(self.types.items())},
        }


def classify_vertices(t, strict=None):
    """Assign a vertex type to every non-corner vertex and total the wedges.

    Open vertices of a fragment tiling are left out of the type counts but
    their wedges still enter the alpha/beta/gamma totals.  With
    incommensurable angles (or ``strict=True``) an unrecognised wedge
    multiset raises ClassificationError; otherwise it counts as "other".
    """
    if strict is None:
        strict = t.spec.angle_mode is AngleMode.INCOMMENSURABLE
    counts = {name: 0 for name in TYPE_NAMES}
    types, corners = {}, []
    na = nb = ng = 0
    corner_contrib = other_contrib = 0
    for v in t.vertices:
        c = v.counts()
        na, nb, ng = na + c[0], nb + c[1], ng + c[2]
        if v.location == "corner":
            corners.append(v.id)
            corner_contrib += contribution(c)
            continue
        if v.location == "open":
            continue
        name = VERTEX_TYPES.get(c)
        expected = AngleMeasure(3, 0) if v.is_pi_vertex else AngleMeasure(6, 0)
        if name is not None and strict and v.angle_sum != expected:
            name = None
        if name is None:
            if strict:
                raise ClassificationError(
                    f"vertex {v.id} at {v.point} has wedges {c} ({v.location}), "
                    "which matches no vertex type")
            name = "other"
            other_contrib += contribution(c)
        counts[name] += 1
        types[v.id] = name
    return VertexCensus(counts, na, nb, ng, t.n, types, corners, corner_contrib, other_contrib)


def census_identity_check(cen, corner_contrib=None):
    """Sum of #alpha + #beta - 2 #gamma over all vertices; zero for a valid tiling."""
    if corner_contrib is None:
        corner_contrib = cen.corner_contrib
    total = sum(TYPE_CONTRIB[name] * cen.counts.get(name, 0) for name in TYPE_CONTRIB)
    return total + cen.other_contrib + corner_contrib


# ---------------------------------------------------------------------------
# link graphs


@dataclass(frozen=True)
class Link:
    tail: int
    head: int
    segment: int
    side: str


@dataclass
class GammaGraph:
    label: str
    links: list
    in_degree: dict
    out_degree: dict

    @property
    def f(self):
        nodes = set(self.in_degree) | set(self.out_degree)
        return {v: self.out_degree.get(v, 0) - self.in_degree.get(v, 0) for v in sorted(nodes)}

    def heads(self):
        return sorted({lk.head for lk in self.links})

    def as_dict(self):
        nodes = sorted(set(self.in_degree) | set(self.out_degree))
        return {
            "label": self.label,
            "links": [{"tail": lk.tail, "head": lk.head, "segment": lk.segment,
                       "side": lk.side} for lk in self.links],
            "degrees": {str(v): {"in": self.in_degree.get(v, 0),
                                 "out": self.out_degree.get(v, 0)} for v in nodes},
        }


def _lo_vertex(f):
    return f.v0 if f.t0 <= f.t1 else f.v1


def _hi_vertex(f):
    return f.v1 if f.t0 <= f.t1 else f.v0


def _runs(frags, label, eps):
    """Maximal runs of consecutive ``label`` fragments (sorted by position)."""
    runs, cur = [], []
    for f in frags:
        if f.label == label and cur and abs(f.lo - cur[-1].hi) <= eps:
            cur.append(f)
            continue
        if cur:
            runs.append(cur)
            cur = []
        if f.label == label:
            cur = [f]
    if cur:
        runs.append(cur)
    return runs


def _has_endpoint(frags, x, eps):
    return any(abs(f.lo - x) <= eps or abs(f.hi - x) <= eps for f in frags)


def build_gamma_graph(t, label):
    """All links of the graph for ``label``.

    A link P -> Q lies on one side S of a maximal segment: the tiles on S
    carry a maximal run of ``label`` edges from P to Q, the other side is
    covered over PQ and has a vertex at P but none at Q, and the edge on S
    that starts at Q (continuing away from P) has a different label.  Both
    directions along each run are tried.
    """
    if label not in LABELS:
        raise ValueError(f"label must be one of a, b, c, not {label!r}")
    eps = t.eps
    links = []
    for seg in t.segments:
        for side in ("left", "right"):
            mine = seg.side(side)
            other = seg.right if side == "left" else seg.left
            if not other:
                continue
            cov = _union(other, eps)
            for run in _runs(mine, label, eps):
                u, v = run[0].lo, run[-1].hi
                if not _covers(cov, u, v, eps):
                    continue
                # forward: tail at u, head at v
                if _has_endpoint(other, u, eps) and not _has_endpoint(other, v, eps):
                    nxt = [f for f in mine if abs(f.lo - v) <= eps]
                    if nxt and nxt[0].label != label:
                        links.append(Link(_lo_vertex(run[0]), _hi_vertex(run[-1]), seg.id, side))
                # backward: tail at v, head at u
                if _has_endpoint(other, v, eps) and not _has_endpoint(other, u, eps):
                    prv = [f for f in mine if abs(f.hi - u) <= eps]
                    if prv and prv[0].label != label:
                        links.append(Link(_hi_vertex(run[-1]), _lo_vertex(run[0]), seg.id, side))
    links.sort(key=lambda lk: (lk.segment, lk.side, lk.tail, lk.head))
    indeg, outdeg = {}, {}
    for lk in links:
        outdeg[lk.tail] = outdeg.get(lk.tail, 0) + 1
        indeg[lk.head] = indeg.get(lk.head, 0) + 1
    return GammaGraph(label, links, indeg, outdeg)


def gamma_graph_checks(t, g):
    """Structural properties every link graph should have, as a dict of flags."""
    heads_pi = all(t.vertices[h].is_pi_vertex or t.vertices[h].location == "open"
                   for h in g.heads())
    on_boundary = [h for h in g.heads() if t.vertices[h].location in ("boundary", "corner")]
    return {
        "max_in_degree": max(g.in_degree.values(), default=0),
        "in_degree_at_most_one": all(d <= 1 for d in g.in_degree.values()),
        "heads_are_pi_vertices": heads_pi,
        "heads_on_boundary": on_boundary,
        "f_sum": sum(g.f.values()),
    }


# ---------------------------------------------------------------------------
# extension lemma audits


@dataclass
class AuditRecord:
    vertex: int
    lemma: str
    segment: int
    labels: tuple
    passed: bool
    witness: tuple | None = None

    def as_dict(self):
        return {"vertex": self.vertex, "lemma": self.lemma, "segment": self.segment,
                "labels": list(self.labels), "passed": self.passed,
                "witness": None if self.witness is None else list(self.witness)}


def _emanating(t, vid):
    """Label pairs on rays leaving ``vid`` where both sides have a tile vertex there.

    Returns a list of (segment id, label on left, label on right).
    """
    eps = t.eps
    out = []
    for seg in t.segments:
        if vid not in seg.vertices:
            continue
        tq = _position(t, seg, vid)
        for pick in (lambda f: abs(f.lo - tq) <= eps, lambda f: abs(f.hi - tq) <= eps):
            left = [f for f in seg.left if pick(f)]
            right = [f for f in seg.right if pick(f)]
            if left and right:
                out.append((seg.id, left[0].label, right[0].label))
    return out


def _position(t, seg, vid):
    p = t.points[vid]
    ux, uy = seg.direction.unit(t.spec.alpha, t.frame)
    return ux * p[0] + uy * p[1]


def audit_extension_lemmas(t, census=None):
    """Check the two segment-extension lemmas at every qualifying pi-vertex.

    Hypothesis "c": on one side of a line through Q, a c-edge ends at Q and
    a non-c edge continues from Q, with Q simple or a star; then some ray
    from Q must carry c on one side and a or b on the other.  Hypothesis
    "a": the same with an a-edge followed by a non-a edge at a simple Q,
    and the ray must carry a against b or c.
    """
    if census is None:
        census = classify_vertices(t, strict=False)
    eps = t.eps
    records = []
    for v in t.vertices:
        if not v.is_pi_vertex:
            continue
        vtype = census.types.get(v.id)
        if vtype not in ("simple", "star"):
            continue
        rays = None
        for seg in t.segments:
            if v.id not in seg.vertices:
                continue
            tq = _position(t, seg, v.id)
            for side in ("left", "right"):
                mine = seg.side(side)
                before = [f for f in mine if abs(f.hi - tq) <= eps]
                after = [f for f in mine if abs(f.lo - tq) <= eps]
                if not before or not after:
                    continue
                pair = (before[0].label, after[0].label)
                for lemma in ("c", "a"):
                    if lemma == "a" and vtype != "simple":
                        continue
                    if lemma not in pair or pair[0] == pair[1]:
                        continue
                    if rays is None:
                        rays = _emanating(t, v.id)
                    hit = next((r for r in rays if r[0] != seg.id and lemma in r[1:]
                                and r[1] != r[2]), None)
                    records.append(AuditRecord(v.id, f"extend-{lemma}", seg.id, pair,
                                               hit is not None, hit))
    return records


# ---------------------------------------------------------------------------
# relations


@dataclass
class Relation:
    """``j*x = p*y + q*z`` where x is the isolated side ``kind`` and (y, z)
    are the other two sides in label order."""

    kind: str
    j: int
    p: int
    q: int
    witness: list = field(default_factory=list)

    def __post_init__(self):
        if self.kind not in LABELS:
            raise ValueError(f"relation kind must be one of a, b, c, not {self.kind!r}")
        if self.j <= 0 or self.p < 0 or self.q < 0:
            raise ValueError("relation needs j > 0 and p, q >= 0")

    def others(self):
        return tuple(x for x in LABELS if x != self.kind)

    def vector(self):
        """Coefficients (ca, cb, cc) with ca*a + cb*b + cc*c = 0."""
        v = dict(zip(self.others(), (-self.p, -self.q)))
        v[self.kind] = self.j
        return tuple(v[x] for x in LABELS)

    def key(self):
        return (self.kind, self.j, self.p, self.q)

    def readings(self):
        return relation_readings(self.vector())

    def __str__(self):
        y, z = self.others()
        rhs = " + ".join(f"{n}{lab}" if n != 1 else lab
                         for n, lab in ((self.p, y), (self.q, z)) if n) or "0"
        lhs = self.kind if self.j == 1 else f"{self.j}{self.kind}"
        return f"{lhs} = {rhs}"

    def as_dict(self):
        return {"kind": f"{self.kind}-relation", "j": self.j, "p": self.p, "q": self.q,
                "text": str(self), "witness": list(self.witness)}


def _integer_vector(diff):
    coeffs = diff.coeffs() if isinstance(diff, SymLen) else tuple(Fraction(x) for x in diff)
    den = 1
    for x in coeffs:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in coeffs]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    return tuple(x // g for x in ints) if g else tuple(ints)


def relation_readings(vec):
    """Every (kind, j, p, q) reading of the homogeneous relation ``vec``."""
    out = []
    for sgn in (1, -1):
        v = [sgn * x for x in vec]
        for i, lab in enumerate(LABELS):
            rest = [v[k] for k in range(3) if k != i]
            if v[i] > 0 and all(x <= 0 for x in rest):
                out.append((lab, v[i], -rest[0], -rest[1]))
    return out


def normalize_relation(diff, witness=None):
    """Turn a nonzero side-sum difference into a canonical Relation.

    The isolated side is the one whose coefficient sign stands alone; when
    only two sides appear the larger coefficient is isolated, ties going
    to the earlier label.  Returns None for a zero difference and raises
    InconsistentRelations when all coefficients share a sign.
    """
    vec = _integer_vector(diff)
    if not any(vec):
        return None
    pos = [i for i in range(3) if vec[i] > 0]
    neg = [i for i in range(3) if vec[i] < 0]
    if not pos or not neg:
        raise InconsistentRelations(f"side sums differ by {vec}, which no positive sides satisfy")
    if len(pos) == 1 and len(neg) == 1:
        i, k = pos[0], neg[0]
        iso = i if (abs(vec[i]), -i) > (abs(vec[k]), -k) else k
    else:
        iso = pos[0] if len(pos) == 1 else neg[0]
    if vec[iso] < 0:
        vec = tuple(-x for x in vec)
    others = [vec[k] for k in range(3) if k != iso]
    return Relation(LABELS[iso], vec[iso], -others[0], -others[1], list(witness or []))


def extract_relations(t):
    """One relation per distinct nonzero side-sum difference on internal segments."""
    found = {}
    for seg in t.segments:
        if not seg.internal:
            continue
        diff = seg.left_sum - seg.right_sum
        rel = normalize_relation(diff, [seg.id])
        if rel is None:
            continue
        if rel.key() in found:
            found[rel.key()].witness.append(seg.id)
        else:
            found[rel.key()] = rel
    return [found[k] for k in sorted(found)]


# ---------------------------------------------------------------------------
# ratio deduction


def rational_kernel(rows, ncols=3):
    """Basis of the rational null space of an integer/rational matrix (RREF)."""
    m = [[Fraction(x) for x in r] for r in rows if any(r)]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        lead = m[r][c]
        m[r] = [x / lead for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                fac = m[i][c]
                m[i] = [x - fac * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -m[i][fc]
        basis.append(tuple(v))
    return basis


def _projection_ratio(basis, i, k):
    """x_i / x_k if every kernel vector fixes it, else None."""
    proj = [(v[i], v[k]) for v in basis]
    ref = next((p for p in proj if p != (0, 0)), None)
    if ref is None:
        return None
    for p in proj:
        if p[0] * ref[1] != p[1] * ref[0]:
            return None
    if ref[1] == 0:
        raise InconsistentRelations("relations force a side length to zero")
    return ref[0] / ref[1]


def _has_positive_solution(rows, basis):
    if not basis:
        return False
    if len(basis) == 1:
        v = basis[0]
        return all(x > 0 for x in v) or all(x < 0 for x in v)
    if len(basis) == 2:
        row = next(r for r in rows if any(r))
        return any(x > 0 for x in row) and any(x < 0 for x in row)
    return True


def closed_form_ratio(rel_a, rel_b):
    """a/b from an a-relation ja = pb + qc and a b-relation Jb = Pa + Qc."""
    j, p, q = rel_a.j, rel_a.p, rel_a.q
    J, P, Q = rel_b.j, rel_b.p, rel_b.q
    if q == 0:
        return Fraction(p, j)
    if Q == 0:
        if P == 0:
            raise InconsistentRelations("b-relation forces b = 0")
        return Fraction(J, P)
    return Fraction(J * q + p * Q, j * Q + q * P)


@dataclass
class RatioResult:
    a_over_b: Fraction | None
    c_over_b: Fraction | None
    rank: int
    kernel: list
    closed_form: Fraction | None = None

    @property
    def determined(self):
        return self.a_over_b is not None and self.c_over_b is not None

    def as_dict(self):
        def fmt(x):
            return "undetermined" if x is None else str(x)
        return {"a/b": fmt(self.a_over_b), "c/b": fmt(self.c_over_b), "rank": self.rank,
                "kernel": [[str(x) for x in v] for v in self.kernel],
                "closed_form_a/b": None if self.closed_form is None else str(self.closed_form)}


def deduce_ratios(rels):
    """Side ratios forced by homogeneous relations over (a, b, c).

    Raises InconsistentRelations when no positive (a, b, c) satisfies them.
    """
    rows = [r.vector() if isinstance(r, Relation) else tuple(r) for r in rels]
    basis = rational_kernel(rows)
    rank = 3 - len(basis)
    if rows and not _has_positive_solution(rows, basis):
        raise InconsistentRelations("relations admit no positive side lengths")
    a_b = _projection_ratio(basis, 0, 1)
    c_b = _projection_ratio(basis, 2, 1)
    closed = None
    rel_objs = [r for r in rels if isinstance(r, Relation)]
    ra = next((r for r in rel_objs if r.kind == "a"), None)
    rb = next((r for r in rel_objs if r.kind == "b"), None)
    if ra is not None and rb is not None:
        closed = closed_form_ratio(ra, rb)
    return RatioResult(a_b, c_b, rank, basis, closed)


# ---------------------------------------------------------------------------
# verdict


CONCLUSIONS = ("commensurable_sides_forced", "exceptional_case_equilateral",
               "exceptional_case_2a_2b_pi3", "inconsistent_tiling", "undetermined",
               "not_applicable")


@dataclass
class Verdict:
    conclusion: str
    relations: list
    ratios: RatioResult | None
    boundary: dict
    audits: list
    census: VertexCensus | None
    census_identity: int | None
    graphs: dict
    notes: list = field(default_factory=list)

    @property
    def a_over_b(self):
        return None if self.ratios is None else self.ratios.a_over_b

    @property
    def c_over_b(self):
        return None if self.ratios is None else self.ratios.c_over_b

    def as_dict(self):
        return {
            "conclusion": self.conclusion,
            "relations": [r.as_dict() for r in self.relations],
            "ratios": None if self.ratios is None else self.ratios.as_dict(),
            "boundary": self.boundary,
            "audits": {
                "total": len(self.audits),
                "failed": [a.as_dict() for a in self.audits if not a.passed],
            },
            "census_identity": self.census_identity,
            "graphs": self.graphs,
            "notes": list(self.notes),
        }


def _triangle_corners(t):
    """Exact corner angles of the region after dropping straight corners."""
    out = []
    for vid in t.region_vids:
        ang = t.vertices[vid].angle_sum
        if ang != AngleMeasure(3, 0):
            out.append(ang)
    return out


def boundary_profile(t):
    """All-c boundary test and the corner angle pattern of the region."""
    bfr = t.boundary_fragments()
    all_c = bool(bfr) and all(f.label == "c" for f in bfr)
    c_on_boundary = {f.tile for f in bfr if f.label == "c"}
    supported = {f.tile for f in bfr}
    profile = {
        "all_c_boundary": all_c,
        "supported_tiles": len(supported),
        "supported_without_c": sorted(supported - c_on_boundary),
        "corners": [],
        "pattern": None,
    }
    if t.region is None:
        return profile
    corners = _triangle_corners(t)
    alpha = t.spec.alpha
    profile["corners"] = [{"p": m.p, "q": m.q, "radians": m.value(alpha)} for m in corners]
    if len(corners) != 3:
        profile["pattern"] = "not_a_triangle"
        return profile
    vals = sorted(m.value(alpha) for m in corners)
    patterns = {
        "similar": sorted([alpha, math.pi / 3 - alpha, 2 * math.pi / 3]),
        "equilateral": [math.pi / 3] * 3,
        "2a_2b_pi3": sorted([2 * alpha, 2 * (math.pi / 3 - alpha), math.pi / 3]),
    }
    profile["pattern"] = "other"
    for name, ref in patterns.items():
        if all(abs(x - y) <= 1e-9 for x, y in zip(vals, ref)):
            profile["pattern"] = name
            break
    # the counts k, l, m of boundary c-edges on each side (for the sawtooth formulas)
    if all_c:
        profile["c_counts"] = [len(seg.fragments) for seg in boundary_walk(t)]
    return profile


def verdict_from_parts(*, incommensurable, pattern, all_c_boundary, ratios,
                       census_identity=0, classification_ok=True):
    """The decision table of the verdict, separated from the tiling.

    ``ratios`` is a RatioResult, or None when the relations are
    inconsistent.  Returns (conclusion, notes).
    """
    if not classification_ok:
        return "inconsistent_tiling", ["a vertex matches no vertex type"]
    if census_identity:
        return "inconsistent_tiling", [f"census identity is {census_identity}, not 0"]
    if ratios is None:
        return "inconsistent_tiling", ["relations admit no positive side lengths"]
    if pattern == "similar":
        return "not_applicable", ["similar tile: the region is a scaled copy of the tile"]
    if pattern in (None, "not_a_triangle"):
        return "not_applicable", ["region is not a triangle"]
    if not incommensurable:
        return "undetermined", ["angles are not declared incommensurable"]
    if ratios.determined:
        return "commensurable_sides_forced", [
            f"a/b = {ratios.a_over_b}, c/b = {ratios.c_over_b}"]
    if all_c_boundary and pattern == "equilateral":
        return "exceptional_case_equilateral", ["all boundary edges are c, region equilateral"]
    if all_c_boundary and pattern == "2a_2b_pi3":
        return "exceptional_case_2a_2b_pi3", ["all boundary edges are c, corners 2alpha, 2beta, pi/3"]
    return "undetermined", ["relations do not fix both side ratios"]


def commensurability_verdict(t):
    """Run census, link graphs, audits and relation extraction, then decide."""
    incomm = t.spec.angle_mode is AngleMode.INCOMMENSURABLE
    notes = []
    classification_ok = True
    try:
        census = classify_vertices(t, strict=incomm)
    except ClassificationError as exc:
        classification_ok = False
        notes.append(str(exc))
        census = classify_vertices(t, strict=False)
    ident = census_identity_check(census)
    graphs = {}
    for lab in LABELS:
        g = build_gamma_graph(t, lab)
        graphs[lab] = {**g.as_dict(), "checks": gamma_graph_checks(t, g)}
    audits = audit_extension_lemmas(t, census) if incomm else []
    rels, ratios = [], None
    try:
        rels = extract_relations(t)
        ratios = deduce_ratios(rels)
    except InconsistentRelations as exc:
        notes.append(str(exc))
    profile = boundary_profile(t)
    if census.counts["other"] and not incomm:
        notes.append(f"{census.counts['other']} vertices of no listed type")
    conclusion, why = verdict_from_parts(
        incommensurable=incomm, pattern=profile["pattern"],
        all_c_boundary=profile["all_c_boundary"], ratios=ratios,
        census_identity=ident, classification_ok=classification_ok)
    return Verdict(conclusion, rels, ratios, profile, audits, census, ident, graphs, notes + why)


# ---------------------------------------------------------------------------
# reports


def analysis_report(t):
    """Everything the analyze command prints, as a JSON-ready dict."""
    v = commensurability_verdict(t)
    for g in v.graphs.values():
        for vid, d in g["degrees"].items():
            d["point"] = list(t.points[int(vid)])
            d["type"] = v.census.types.get(int(vid), t.vertices[int(vid)].location)
    return {
        "tiles": t.n,
        "fragment": t.fragment,
        "census": v.census.as_dict(),
        "census_identity": v.census_identity,
        "graphs": v.graphs,
        "relations": [r.as_dict() for r in v.relations],
        "audits": [a.as_dict() for a in v.audits],
        "verdict": v.as_dict(),
    }


def format_report_text(rep):
    lines = [f"tiles: {rep['tiles']}" + (" (fragment)" if rep["fragment"] else "")]
    cen = rep["census"]
    lines.append("census: " + ", ".join(f"{k}={n}" for k, n in cen["counts"].items() if n))
    lines.append(f"  N_alpha={cen['N_alpha']} N_beta={cen['N_beta']} N_gamma={cen['N_gamma']} "
                 f"S={cen['S']} S2={cen['S2']} C={cen['C']}")
    lines.append(f"census identity: {rep['census_identity']}")
    for lab, g in rep["graphs"].items():
        lines.append(f"graph {lab}: {len(g['links'])} links")
        for vid, d in g["degrees"].items():
            lines.append(f"  vertex {vid}: in={d['in']} out={d['out']}")
    if rep["relations"]:
        lines.append("relations:")
        for r in rep["relations"]:
            lines.append(f"  {r['text']}  (segments {', '.join(map(str, r['witness']))})")
    else:
        lines.append("relations: none")
    failed = [a for a in rep["audits"] if not a["passed"]]
    lines.append(f"lemma audits: {len(rep['audits'])} checked, {len(failed)} failed")
    ver = rep["verdict"]
    if ver["ratios"]:
        lines.append(f"ratios: a/b={ver['ratios']['a/b']} c/b={ver['ratios']['c/b']}")
    lines.append(f"verdict: {ver['conclusion']}")
    for n in ver["notes"]:
        lines.append(f"  {n}")
    return "\n".join(lines)


__all__ = [
    "VertexCensus", "classify_vertices", "census_identity_check", "GammaGraph", "Link",
    "build_gamma_graph", "gamma_graph_checks", "AuditRecord", "audit_extension_lemmas",
    "Relation", "normalize_relation", "relation_readings", "extract_relations",
    "rational_kernel", "deduce_ratios", "closed_form_ratio", "RatioResult", "Verdict",
    "CONCLUSIONS", "boundary_profile", "verdict_from_parts", "commensurability_verdict",
    "analysis_report", "format_report_text", "VERTEX_TYPES", "TYPE_CONTRIB",
]
