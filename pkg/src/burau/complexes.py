"""Bounded complexes of graded projectives over a zigzag algebra, with
spherical twists, Gaussian minimization, and bigraded Hom spaces.

A complex stores summands P_i{g}[h] as (vertex, g, h) triples plus a sparse
differential.  Differential entries raise h by one and are homogeneous of
internal degree g_source - g_target, which is the unique convention
compatible with the decategorification rule k0 = sum (-1)^h q^g alpha_i, the
twist anchors k0(twist_i+ P_i) = -q^2 alpha_i and
k0(twist_i+ P_j) = alpha_j - q alpha_i, and with the Euler-characteristic
identity euler_pairing(X, Y) = pairing(k0 X, k0 Y).

The positive twist along P_i glues shifted copies of P_i one homological step
below each summand (the evaluation cone); the negative twist glues them one
step above.  Both minimize the result before returning it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .graphs import CoxeterGraph, validate_word
from .laurent import ZZ, LaurentPoly
from .matrices import BurauVector
from .zigzag import Elt, ZigzagAlgebra, token_degree

Summand = tuple  # (vertex, g, h)


@dataclass(frozen=True)
class ProjComplex:
    algebra: ZigzagAlgebra
    summands: tuple  # of (vertex, g, h)
    diff: dict = field(default_factory=dict)  # (src_idx, dst_idx) -> Elt

    def __post_init__(self) -> None:
        for (s, t), e in self.diff.items():
            vs, gs, hs = self.summands[s]
            vt, gt, ht = self.summands[t]
            if ht != hs + 1:
                raise ValueError(f"entry {s}->{t} does not raise h by one")
            if e.is_zero():
                raise ValueError(f"stored zero entry {s}->{t}")
            for tok in e.coeffs:
                src = tok[1]
                dst = tok[2] if tok[0] == "a" else tok[1]
                if src != vs or dst != vt:
                    raise ValueError(
                        f"entry {s}->{t} has token {tok} outside "
                        f"e_{vt} A e_{vs}"
                    )
            if e.degree() != gs - gt:
                raise ValueError(
                    f"entry {s}->{t} has degree {e.degree()}, "
                    f"expected {gs - gt}"
                )

    def check_d2(self) -> None:
        """Raise unless the differential squares to zero."""
        by_src: dict[int, list] = {}
        for (s, t), e in self.diff.items():
            by_src.setdefault(s, []).append((t, e))
        for (s, t), e in self.diff.items():
            acc: dict[int, Elt] = {}
            for u, e2 in by_src.get(t, []):
                prod = e2 * e
                if not prod.is_zero():
                    acc[u] = acc.get(u, Elt.zero()) + prod
            for u, total in acc.items():
                if not total.is_zero():
                    raise ValueError(f"d^2 != 0 along {s} -> {t} -> {u}")

    def shifted(self, dg: int, dh: int) -> "ProjComplex":
        """The shift X{dg}[dh]."""
        moved = tuple((v, g + dg, h + dh) for v, g, h in self.summands)
        return ProjComplex(self.algebra, moved, dict(self.diff))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ProjComplex)
            and self.algebra == other.algebra
            and self.summands == other.summands
            and self.diff == other.diff
        )

    def __str__(self) -> str:
        lines = [
            f"{idx}: P{v}{{{g}}}[{h}]"
            for idx, (v, g, h) in enumerate(self.summands)
        ]
        for (s, t) in sorted(self.diff):
            lines.append(f"{s} -> {t} : {self.diff[(s, t)]}")
        return "\n".join(lines) if lines else "(zero complex)"


def projective(algebra: ZigzagAlgebra, i: int) -> ProjComplex:
    """P_i placed in bidegree {0}[0] with zero differential."""
    if not 1 <= i <= algebra.graph.n:
        raise ValueError(f"vertex {i} out of range 1..{algebra.graph.n}")
    return ProjComplex(algebra, ((i, 0, 0),), {})


def k0_class(x: ProjComplex) -> BurauVector:
    """Decategorification: each summand P_i{g}[h] contributes (-1)^h q^g to
    the alpha_i coordinate.  Always a vector over Z[q, q^-1]."""
    acc: list[dict[int, int]] = [{} for _ in range(x.algebra.graph.n)]
    for v, g, h in x.summands:
        d = acc[v - 1]
        d[g] = d.get(g, 0) + (-1 if h % 2 else 1)
    coords = tuple(LaurentPoly.from_dict(ZZ, d) for d in acc)
    return BurauVector(x.algebra.graph, ZZ, coords)


def minimize(x: ProjComplex) -> ProjComplex:
    """Gaussian elimination: repeatedly cancel summand pairs joined by an
    invertible multiple of an idempotent, updating the rest of the
    differential.  Preserves the homotopy type, k0, and all Hom tables."""
    out: dict[int, dict[int, Elt]] = {}
    inc: dict[int, dict[int, Elt]] = {}
    for (s, t), e in x.diff.items():
        out.setdefault(s, {})[t] = e
        inc.setdefault(t, {})[s] = e
    alive = set(range(len(x.summands)))

    def find_pair():
        for s in sorted(out):
            for t in sorted(out[s]):
                e = out[s][t]
                toks = list(e.coeffs)
                if len(toks) == 1 and toks[0][0] == "e":
                    return s, t, e.coeffs[toks[0]]
        return None

    while True:
        hit = find_pair()
        if hit is None:
            break
        s, t, c = hit
        cinv = Fraction(1) / c
        ins = [(u, a) for u, a in inc.get(t, {}).items() if u != s]
        outs = [(w, b) for w, b in out.get(s, {}).items() if w != t]
        for u, a in ins:
            for w, b in outs:
                upd = (b * a).scale(-cinv)
                if upd.is_zero():
                    continue
                cur = out.setdefault(u, {}).get(w)
                new = upd if cur is None else cur + upd
                if new.is_zero():
                    del out[u][w]
                    del inc[w][u]
                else:
                    out[u][w] = new
                    inc.setdefault(w, {})[u] = new
        for dead in (s, t):
            alive.discard(dead)
            for w in list(out.get(dead, {})):
                del inc[w][dead]
            out.pop(dead, None)
            for u in list(inc.get(dead, {})):
                del out[u][dead]
            inc.pop(dead, None)

    keep = sorted(alive)
    renum = {old: new for new, old in enumerate(keep)}
    summands = tuple(x.summands[old] for old in keep)
    diff = {}
    for s, targets in out.items():
        for t, e in targets.items():
            diff[(renum[s], renum[t])] = e
    return ProjComplex(x.algebra, summands, diff)


def apply_twist(x: ProjComplex, i: int, sign: int) -> ProjComplex:
    """The spherical twist along P_i (sign=+1) or its inverse (sign=-1),
    returned in minimized form."""
    algebra = x.algebra
    if not 1 <= i <= algebra.graph.n:
        raise ValueError(f"vertex {i} out of range 1..{algebra.graph.n}")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")

    summands = list(x.summands)
    diff = dict(x.diff)
    new_index: dict[tuple, int] = {}

    if sign == 1:
        # glue P_i{g + deg y}[h - 1] -> P_j{g}[h] for y in Hom(P_i, P_j)
        for t, (j, g, h) in enumerate(x.summands):
            for y in algebra.hom_basis(i, j):
                idx = len(summands)
                summands.append((i, g + token_degree(y), h - 1))
                new_index[(t, y)] = idx
                diff[(idx, t)] = Elt.from_token(y)
        for (t1, t2), e in x.diff.items():
            j1 = x.summands[t1][0]
            j2 = x.summands[t2][0]
            for y1 in algebra.hom_basis(i, j1):
                z = e * Elt.from_token(y1)
                for y2 in algebra.hom_basis(i, j2):
                    c = z.coeff(y2)
                    if c:
                        key = (new_index[(t1, y1)], new_index[(t2, y2)])
                        diff[key] = Elt({("e", i): -c})
    else:
        # glue P_j{g}[h] -> P_i{g - deg y}[h + 1] for y in Hom(P_j, P_i)
        for t, (j, g, h) in enumerate(x.summands):
            for y in algebra.hom_basis(j, i):
                idx = len(summands)
                summands.append((i, g - token_degree(y), h + 1))
                new_index[(t, y)] = idx
                diff[(t, idx)] = Elt.from_token(y)
        for (t1, t2), e in x.diff.items():
            j1 = x.summands[t1][0]
            j2 = x.summands[t2][0]
            for y2 in algebra.hom_basis(j2, i):
                z = Elt.from_token(y2) * e
                for y1 in algebra.hom_basis(j1, i):
                    c = z.coeff(y1)
                    if c:
                        key = (new_index[(t1, y1)], new_index[(t2, y2)])
                        diff[key] = Elt({("e", i): -c})

    cone = ProjComplex(algebra, tuple(summands), diff)
    return minimize(cone)


def act_complex(g: CoxeterGraph, word, x: ProjComplex) -> ProjComplex:
    """Apply a braid word by composed twists, rightmost letter first, in the
    same word order as the Burau action."""
    if g != x.algebra.graph:
        raise ValueError("graph mismatch")
    validate_word(g, word)
    for letter in reversed(word):
        x = apply_twist(x, abs(letter), 1 if letter > 0 else -1)
    return x


def _rank(rows: list[list[Fraction]]) -> int:
    """Exact rank by fraction-free-ish Gaussian elimination over Q."""
    rank = 0
    rows = [row[:] for row in rows if any(row)]
    ncols = len(rows[0]) if rows else 0
    col = 0
    while rows and col < ncols:
        pivot = None
        for ridx in range(rank, len(rows)):
            if rows[ridx][col] != 0:
                pivot = ridx
                break
        if pivot is None:
            col += 1
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        pv = rows[rank][col]
        prow = rows[rank]
        for ridx in range(rank + 1, len(rows)):
            f = rows[ridx][col]
            if f:
                row = rows[ridx]
                scale = f / pv
                for cidx in range(col, ncols):
                    row[cidx] -= scale * prow[cidx]
        rank += 1
        col += 1
        if rank == len(rows):
            break
    return rank


def hom_table(x: ProjComplex, y: ProjComplex) -> dict:
    """Cohomology dimensions of the bigraded Hom complex, as a map
    (g, h) -> dim with only positive entries stored.

    The (g, h) component is spanned by algebra maps P_{i_S} -> P_{i_T}
    between summands S of x and T of y with deg + g_T - g_S = g and
    h_T - h_S = h; the differential is f -> d_y f - (-1)^h f d_x.
    """
    if x.algebra != y.algebra:
        raise ValueError("algebra mismatch")
    algebra = x.algebra

    blocks: dict[tuple, list] = {}  # (g, h) -> [(s, t, tok)]
    position: dict[tuple, int] = {}  # (s, t, tok) -> index in its block
    for s, (vs, gs, hs) in enumerate(x.summands):
        for t, (vt, gt, ht) in enumerate(y.summands):
            for tok in algebra.hom_basis(vs, vt):
                key = (token_degree(tok) + gt - gs, ht - hs)
                block = blocks.setdefault(key, [])
                position[(s, t, tok)] = len(block)
                block.append((s, t, tok))

    y_out: dict[int, list] = {}
    for (t, t2), e in y.diff.items():
        y_out.setdefault(t, []).append((t2, e))
    x_inc: dict[int, list] = {}
    for (s0, s), e in x.diff.items():
        x_inc.setdefault(s, []).append((s0, e))

    def image(basis_elt, h):
        s, t, tok = basis_elt
        f = Elt.from_token(tok)
        terms: dict[tuple, Fraction] = {}
        for t2, e in y_out.get(t, []):
            z = e * f
            for tok2, c in z.coeffs.items():
                key = (s, t2, tok2)
                terms[key] = terms.get(key, 0) + c
        sgn = -1 if h % 2 == 0 else 1  # the -(-1)^h factor
        for s0, e in x_inc.get(s, []):
            z = f * e
            for tok2, c in z.coeffs.items():
                key = (s0, t, tok2)
                terms[key] = terms.get(key, 0) + sgn * c
        return terms

    ranks: dict[tuple, int] = {}
    for (g, h), basis in blocks.items():
        target = blocks.get((g, h + 1), [])
        if not target:
            ranks[(g, h)] = 0
            continue
        cols = []
        for b in basis:
            vec = [Fraction(0)] * len(target)
            for key, c in image(b, h).items():
                vec[position[key]] += c
            cols.append(vec)
        # rank is transpose-invariant, so feed columns as rows
        ranks[(g, h)] = _rank(cols)

    table: dict[tuple, int] = {}
    for (g, h), basis in blocks.items():
        dim = len(basis) - ranks.get((g, h), 0) - ranks.get((g, h - 1), 0)
        if dim < 0:
            raise AssertionError(f"negative cohomology dimension at {(g, h)}")
        if dim:
            table[(g, h)] = dim
    return table


def total_hom_dim(x: ProjComplex, y: ProjComplex) -> int:
    return sum(hom_table(x, y).values())


def euler_pairing(x: ProjComplex, y: ProjComplex) -> LaurentPoly:
    """Sum of (-1)^h q^g over the Hom table; matches the Burau pairing of the
    k0 classes."""
    acc: dict[int, int] = {}
    for (g, h), dim in hom_table(x, y).items():
        acc[g] = acc.get(g, 0) + (-dim if h % 2 else dim)
    return LaurentPoly.from_dict(ZZ, acc)


def is_spherical(x: ProjComplex) -> bool:
    """True when the endomorphism table is exactly that of a 2-sphere:
    one dimension at (0,0) and one at (2,0)."""
    return hom_table(x, x) == {(0, 0): 1, (2, 0): 1}


def render_hom_table(table: dict) -> str:
    lines = [
        f"({g},{h}): {table[(g, h)]}"
        for g, h in sorted(table)
    ]
    return "\n".join(lines) if lines else "(empty)"
