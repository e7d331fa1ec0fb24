"""Dual Garside structure for finite simply-laced Coxeter graphs.

The Coxeter group is enumerated exactly through its geometric representation
(the q = -1 Burau matrices, which are faithful), so group elements are
interned integer matrices and equality is matrix equality.  On top of that
live the reflections, the interval [1, gamma] under reflection length, dual
braid lifts constructed by Hurwitz moves from the defining factorization
gamma = s_1 ... s_n, and the right-greedy normal form that solves the braid
word problem.

Normal forms are maintained incrementally: positive letters append an atom,
negative letters borrow gamma^{-1} and append the complementary simple, and a
local rebalancing pass restores greediness.  Products of simples are only
ever taken when reflection lengths add, which is exactly when the interval
monoid relation [x][y] = [xy] holds, so the computed form is independent of
how the input word was spelled.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from .graphs import INF, CoxeterGraph, inverse_word, validate_word
from .laurent import ZZ
from .matrices import STANDARD, generator_matrix

MAX_GROUP_SIZE = 10**6


class NotFiniteType(ValueError):
    """Raised when a graph is not of finite Coxeter type."""


def _finite_simply_laced(g: CoxeterGraph) -> bool:
    """Classification check: every connected component must be a path (type A)
    or a tree with a single degree-3 vertex whose branch lengths are
    (1, 1, k), (1, 2, 2), (1, 2, 3) or (1, 2, 4) (types D and E)."""
    if any(m == INF for _, m in g.edge_labels):
        return False
    adj = {v: set() for v in g.vertices()}
    for i, j in g.edges():
        adj[i].add(j)
        adj[j].add(i)
    seen: set[int] = set()
    for start in g.vertices():
        if start in seen:
            continue
        comp = [start]
        seen.add(start)
        for v in comp:
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
        edge_count = sum(len(adj[v]) for v in comp) // 2
        if edge_count != len(comp) - 1:
            return False  # a cycle: affine or worse
        degrees = sorted(len(adj[v]) for v in comp)
        if degrees and degrees[-1] > 3:
            return False
        branch_vertices = [v for v in comp if len(adj[v]) == 3]
        if len(branch_vertices) > 1:
            return False
        if branch_vertices:
            b = branch_vertices[0]
            lengths = []
            for first in adj[b]:
                ln, prev, cur = 1, b, first
                while True:
                    nxt = [w for w in adj[cur] if w != prev]
                    if not nxt:
                        break
                    prev, cur = cur, nxt[0]
                    ln += 1
                lengths.append(ln)
            lengths.sort()
            if lengths[0] != 1:
                return False
            if lengths[1] >= 2 and (lengths[1], lengths[2]) not in (
                (2, 2),
                (2, 3),
                (2, 4),
            ):
                return False
    return True


@dataclass(frozen=True)
class CoxeterElt:
    """A Coxeter group element as its exact integer matrix at q = -1."""

    matrix: tuple


@dataclass(frozen=True)
class DualSimple:
    """An element of the interval [1, gamma]: its matrix, reflection length,
    the indices (1-based into the reflection list) of its reflection
    divisors, and a fixed braid-word lift."""

    matrix: tuple
    length: int
    divisor_reflections: tuple
    lift: tuple

    def __str__(self) -> str:
        body = ",".join(str(r) for r in self.divisor_reflections)
        return f"R{{{body}}}"


@dataclass(frozen=True)
class GarsideNF:
    """gamma^k times a right-greedy list of simples (leftmost first)."""

    k: int
    simples: tuple
    gamma_word: tuple

    def is_trivial(self) -> bool:
        return self.k == 0 and not self.simples

    def canonical_length(self) -> int:
        return len(self.simples)

    def braid_word(self) -> tuple:
        if self.k >= 0:
            word = self.gamma_word * self.k
        else:
            word = inverse_word(self.gamma_word) * (-self.k)
        for s in self.simples:
            word = word + s.lift
        return word

    def __str__(self) -> str:
        inner = " | ".join(str(s) for s in self.simples) or "-"
        return f"gamma^{self.k} . [{inner}]"


class DualGarside:
    """All the tables for one graph and one Coxeter element order."""

    def __init__(self, graph: CoxeterGraph, order=None, max_size=MAX_GROUP_SIZE):
        if not _finite_simply_laced(graph):
            raise NotFiniteType(
                "the dual Garside structure needs a finite simply-laced graph "
                "(components of type A, D or E)"
            )
        self.graph = graph
        self.n = graph.n
        self.order = tuple(order) if order is not None else tuple(graph.vertices())
        if sorted(self.order) != list(graph.vertices()):
            raise ValueError("order must be a permutation of the vertices")

        gens = []
        for i in graph.vertices():
            m = generator_matrix(graph, i, 1, STANDARD, ZZ)
            gens.append(
                tuple(tuple(e.evaluate(-1) for e in row) for row in m.rows)
            )
        self._enumerate(gens, max_size)
        self.identity = 0
        self.gamma = self._fold(self.identity, self.order)
        self.gamma_word = self.order

        self._build_mult_table()
        self.inv = [self._invert(w) for w in range(self.size)]
        self._find_reflections()
        self._reflection_lengths()
        if self.ell[self.gamma] != self.n:
            raise AssertionError("gamma should have reflection length n")
        self.interval_ids = [
            w
            for w in range(self.size)
            if self.ell[w] + self.ell[self.mult(self.inv[w], self.gamma)] == self.n
        ]
        self.in_interval = [False] * self.size
        for w in self.interval_ids:
            self.in_interval[w] = True
        # reflections that strip one unit of length from the right
        self.rdiv = [()] * self.size
        for w in self.interval_ids:
            self.rdiv[w] = tuple(
                t for t in self.refl_ids if self.ell[self.mult(w, t)] == self.ell[w] - 1
            )
        self.phi = [
            self.mult(self.mult(self.gamma, w), self.inv[self.gamma])
            for w in range(self.size)
        ]
        self.phi_inv = [0] * self.size
        for w, img in enumerate(self.phi):
            self.phi_inv[img] = w
        self.atom_ids = {i: self.rg[self.identity][i - 1] for i in graph.vertices()}
        self._lifts: dict[int, tuple] | None = None
        self._simple_lift_cache: dict[int, tuple] = {}
        self._simple_cache: dict[int, DualSimple] = {}

    # ---- group enumeration ------------------------------------------------

    def _enumerate(self, gens, max_size) -> None:
        n = self.n
        ident = tuple(
            tuple(1 if i == j else 0 for j in range(n)) for i in range(n)
        )
        index = {ident: 0}
        mats = [ident]
        words: list[tuple] = [()]
        rg: list[list[int]] = []
        queue = deque([0])
        while queue:
            w = queue.popleft()
            row = []
            base = mats[w]
            for gi, gmat in enumerate(gens):
                prod = tuple(
                    tuple(
                        sum(base[i][k] * gmat[k][j] for k in range(n))
                        for j in range(n)
                    )
                    for i in range(n)
                )
                idx = index.get(prod)
                if idx is None:
                    idx = len(mats)
                    if idx >= max_size:
                        raise NotFiniteType(
                            f"group enumeration exceeded {max_size} elements"
                        )
                    index[prod] = idx
                    mats.append(prod)
                    words.append(words[w] + (gi + 1,))
                    queue.append(idx)
                row.append(idx)
            rg.append(row)
        self.size = len(mats)
        self.matrices = mats
        self.words = words
        self.rg = rg

    def _fold(self, start: int, letters) -> int:
        w = start
        for i in letters:
            w = self.rg[w][i - 1]
        return w

    def _build_mult_table(self) -> None:
        if self.size <= 1024:
            self._table = [
                [self._fold(a, self.words[b]) for b in range(self.size)]
                for a in range(self.size)
            ]
        else:
            self._table = None

    def mult(self, a: int, b: int) -> int:
        if self._table is not None:
            return self._table[a][b]
        return self._fold(a, self.words[b])

    def _invert(self, w: int) -> int:
        out = self.identity
        for i in reversed(self.words[w]):
            out = self.rg[out][i - 1]
        return out

    def _find_reflections(self) -> None:
        atoms = [self.rg[self.identity][i] for i in range(self.n)]
        found = set()
        for w in range(self.size):
            wi = self._invert(w)
            for s in atoms:
                found.add(self.mult(self.mult(w, s), wi))
        others = sorted(
            (t for t in found if t not in atoms),
            key=lambda t: self.matrices[t],
        )
        self.refl_ids = atoms + others

    def _reflection_lengths(self) -> None:
        ell = [-1] * self.size
        ell[self.identity] = 0
        queue = deque([self.identity])
        while queue:
            w = queue.popleft()
            for t in self.refl_ids:
                u = self.mult(w, t)
                if ell[u] < 0:
                    ell[u] = ell[w] + 1
                    queue.append(u)
        self.ell = ell

    # ---- braid lifts -------------------------------------------------------

    def _hurwitz_lifts(self) -> dict[int, tuple]:
        """One fixed braid word per reflection, read off the Hurwitz orbit of
        the defining factorization gamma = s_{o1} ... s_{on}.  Hurwitz moves
        are braid-level identities, so which orbit path finds a reflection
        first does not affect the braid it lifts to."""
        start_fact = tuple(self.atom_ids[i] for i in self.order)
        start_lift = tuple((i,) for i in self.order)
        lifts: dict[int, tuple] = {}
        seen = {start_fact}
        queue = deque([(start_fact, start_lift)])
        while queue:
            fact, lift = queue.popleft()
            for t, lw in zip(fact, lift):
                if t not in lifts:
                    lifts[t] = lw
            for pos in range(self.n - 1):
                a, b = fact[pos], fact[pos + 1]
                la, lb = lift[pos], lift[pos + 1]
                aba = self.mult(self.mult(a, b), a)
                left = fact[:pos] + (aba, a) + fact[pos + 2 :]
                if left not in seen:
                    seen.add(left)
                    queue.append(
                        (left, lift[:pos] + (la + lb + inverse_word(la), la) + lift[pos + 2 :])
                    )
                bab = self.mult(self.mult(b, a), b)
                right = fact[:pos] + (b, bab) + fact[pos + 2 :]
                if right not in seen:
                    seen.add(right)
                    queue.append(
                        (right, lift[:pos] + (lb, inverse_word(lb) + la + lb) + lift[pos + 2 :])
                    )
        missing = [t for t in self.refl_ids if t not in lifts]
        if missing:
            raise AssertionError("Hurwitz orbit missed some reflections")
        return lifts

    @property
    def reflection_lifts(self) -> dict[int, tuple]:
        if self._lifts is None:
            self._lifts = self._hurwitz_lifts()
        return self._lifts

    def simple_lift(self, w: int) -> tuple:
        """A braid word lifting the interval element w, by greedily peeling
        reflections off the right."""
        if w == self.identity:
            return ()
        cached = self._simple_lift_cache.get(w)
        if cached is not None:
            return cached
        if not self.in_interval[w]:
            raise ValueError("only interval elements have canonical lifts")
        lifts = self.reflection_lifts
        for t in self.refl_ids:
            if self.ell[self.mult(w, t)] == self.ell[w] - 1:
                word = self.simple_lift(self.mult(w, t)) + lifts[t]
                self._simple_lift_cache[w] = word
                return word
        raise AssertionError("unreachable: positive-length element with no divisor")

    def simple(self, w: int) -> DualSimple:
        got = self._simple_cache.get(w)
        if got is None:
            divisors = tuple(
                idx + 1
                for idx, t in enumerate(self.refl_ids)
                if self.ell[self.mult(t, w)] == self.ell[w] - 1
            )
            got = DualSimple(
                matrix=self.matrices[w],
                length=self.ell[w],
                divisor_reflections=divisors,
                lift=self.simple_lift(w),
            )
            self._simple_cache[w] = got
        return got

    # ---- divisibility ------------------------------------------------------

    def left_divides(self, a: int, b: int) -> bool:
        return self.ell[a] + self.ell[self.mult(self.inv[a], b)] == self.ell[b]

    def right_divides(self, a: int, b: int) -> bool:
        return self.ell[self.mult(b, self.inv[a])] + self.ell[a] == self.ell[b]

    def gamma_order(self) -> int:
        k, w = 1, self.gamma
        while w != self.identity:
            w = self.mult(w, self.gamma)
            k += 1
        return k

    # ---- normal form -------------------------------------------------------

    def normal_form(self, word) -> GarsideNF:
        validate_word(self.graph, word)
        state = _NFState(self)
        for letter in word:
            state.push_letter(letter)
        return state.result()

    def normal_form_of_nf_times_letter(self, nf: GarsideNF, letter: int) -> GarsideNF:
        state = _NFState.from_nf(self, nf)
        state.push_letter(letter)
        return state.result()

    def new_nf_state(self) -> "_NFState":
        return _NFState(self)


class _NFState:
    """Mutable normal-form accumulator: gamma power + doubly linked list of
    simple factors with stable node handles, so rebalancing can delete and
    rewrite locally without index shuffling."""

    def __init__(self, ctx: DualGarside):
        self.ctx = ctx
        self.k = 0
        self.value: dict[int, int] = {}
        self.nxt: dict[int, int | None] = {}
        self.prv: dict[int, int | None] = {}
        self.head: int | None = None
        self.tail: int | None = None
        self.counter = 0
        self.stack: list[int] = []

    @staticmethod
    def from_nf(ctx: DualGarside, nf: GarsideNF) -> "_NFState":
        state = _NFState(ctx)
        state.k = nf.k
        index = {m: i for i, m in enumerate(ctx.matrices)}
        for s in nf.simples:
            state._append(index[s.matrix])
        state._drain()
        return state

    def _append(self, w: int) -> None:
        nid = self.counter
        self.counter += 1
        self.value[nid] = w
        self.prv[nid] = self.tail
        self.nxt[nid] = None
        if self.tail is not None:
            self.nxt[self.tail] = nid
        else:
            self.head = nid
        self.tail = nid
        if self.prv[nid] is not None:
            self.stack.append(self.prv[nid])
        self._maybe_extract_gamma(nid)

    def _delete(self, nid: int) -> None:
        p, n = self.prv[nid], self.nxt[nid]
        if p is not None:
            self.nxt[p] = n
        else:
            self.head = n
        if n is not None:
            self.prv[n] = p
        else:
            self.tail = p
        del self.value[nid], self.prv[nid], self.nxt[nid]

    def _maybe_extract_gamma(self, nid: int) -> None:
        ctx = self.ctx
        if self.value.get(nid) != ctx.gamma:
            return
        self.k += 1
        cur = self.prv[nid]
        while cur is not None:
            self.value[cur] = ctx.phi_inv[self.value[cur]]
            cur = self.prv[cur]
        before = self.prv[nid]
        self._delete(nid)
        if before is not None:
            self.stack.append(before)

    def push_letter(self, letter: int) -> None:
        ctx = self.ctx
        if letter > 0:
            self._append(ctx.atom_ids[letter])
        else:
            self.k -= 1
            for nid in self.value:
                self.value[nid] = ctx.phi[self.value[nid]]
            self._append(ctx.mult(ctx.gamma, ctx.atom_ids[-letter]))
        self._drain()

    def push_simple(self, w: int) -> None:
        """Right-multiply by an interval element directly."""
        if w != self.ctx.identity:
            self._append(w)
            self._drain()

    def canonical_length(self) -> int:
        return len(self.value)

    def _drain(self) -> None:
        ctx = self.ctx
        while self.stack:
            nid = self.stack.pop()
            if nid not in self.value:
                continue
            mid = self.nxt[nid]
            if mid is None:
                continue
            left, right = self.value[nid], self.value[mid]
            slid = None
            for mu in ctx.rdiv[left]:
                cand = ctx.mult(mu, right)
                if ctx.in_interval[cand] and ctx.ell[cand] == ctx.ell[right] + 1:
                    slid = (mu, cand)
                    break
            if slid is None:
                continue
            mu, cand = slid
            new_left = ctx.mult(left, mu)
            self.value[mid] = cand
            if new_left == ctx.identity:
                before = self.prv[nid]
                self._delete(nid)
                if before is not None:
                    self.stack.append(before)
            else:
                self.value[nid] = new_left
                if self.prv[nid] is not None:
                    self.stack.append(self.prv[nid])
                self.stack.append(nid)
            self.stack.append(mid)
            self._maybe_extract_gamma(mid)

    def factors(self) -> list[int]:
        out = []
        cur = self.head
        while cur is not None:
            out.append(self.value[cur])
            cur = self.nxt[cur]
        return out

    def result(self) -> GarsideNF:
        self._drain()
        return GarsideNF(
            k=self.k,
            simples=tuple(self.ctx.simple(w) for w in self.factors()),
            gamma_word=self.ctx.gamma_word,
        )


@lru_cache(maxsize=None)
def garside_context(g: CoxeterGraph, order=None) -> DualGarside:
    return DualGarside(g, order)


def coxeter_element(g: CoxeterGraph, order=None) -> CoxeterElt:
    ctx = garside_context(g, order)
    return CoxeterElt(ctx.matrices[ctx.gamma])


def reflections(g: CoxeterGraph) -> list[CoxeterElt]:
    ctx = garside_context(g)
    return [CoxeterElt(ctx.matrices[t]) for t in ctx.refl_ids]


def interval(g: CoxeterGraph, order=None) -> list[DualSimple]:
    ctx = garside_context(g, order)
    return [ctx.simple(w) for w in ctx.interval_ids]


def _resolve(ctx: DualGarside, x) -> int:
    if isinstance(x, (CoxeterElt, DualSimple)):
        key = x.matrix
    else:
        key = x
    for idx, m in enumerate(ctx.matrices):
        if m == key:
            return idx
    raise ValueError("element does not belong to this group")


def divides(g: CoxeterGraph, a, b, order=None, side: str = "left") -> bool:
    ctx = garside_context(g, order)
    ai, bi = _resolve(ctx, a), _resolve(ctx, b)
    if side == "left":
        return ctx.left_divides(ai, bi)
    if side == "right":
        return ctx.right_divides(ai, bi)
    raise ValueError("side must be 'left' or 'right'")


def word_to_nf(g: CoxeterGraph, word, order=None) -> GarsideNF:
    return garside_context(g, order).normal_form(word)


def is_trivial_braid(g: CoxeterGraph, word, order=None) -> bool:
    return word_to_nf(g, word, order).is_trivial()


@dataclass(frozen=True)
class SamecurveReport:
    zero_gamma_power: bool
    append_stays_greedy: bool
    atom_free_last_simple: bool
    nf: str
    nf_appended: str

    def all_pass(self) -> bool:
        return (
            self.zero_gamma_power
            and self.append_stays_greedy
            and self.atom_free_last_simple
        )


def samecurve_check(g: CoxeterGraph, word, i: int, order=None) -> SamecurveReport:
    """The three normal-form conditions under which appending sigma_i keeps a
    braid's rightmost factor clean: no gamma power, appending sigma_i simply
    extends the factor list, and the atom s_i does not divide the last factor.
    Reported separately; nothing is assumed about the input word."""
    ctx = garside_context(g, order)
    nf = ctx.normal_form(word)
    appended = ctx.normal_form_of_nf_times_letter(nf, i)
    cond1 = nf.k == 0
    cond2 = (
        appended.k == nf.k
        and len(appended.simples) == len(nf.simples) + 1
        and appended.simples[: len(nf.simples)] == nf.simples
        and appended.simples[-1].matrix == ctx.matrices[ctx.atom_ids[i]]
    )
    if nf.simples:
        last = _resolve(ctx, nf.simples[-1])
        cond3 = not ctx.left_divides(ctx.atom_ids[i], last)
    else:
        cond3 = True
    return SamecurveReport(
        zero_gamma_power=cond1,
        append_stays_greedy=cond2,
        atom_free_last_simple=cond3,
        nf=str(nf),
        nf_appended=str(appended),
    )
