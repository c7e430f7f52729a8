"""Whole-state-space analysis and the claim checkers.

Each checker computes membership in the image of evaluation from the
dynamics (:mod:`revdom.action`) and compares it, state by state, with the
brute-force predicates of :mod:`revdom.oracles`.
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from . import action
from . import oracles
from .action import GeneratorMap
from .conditions import Condition, ODD_CLOSED, PERFECT_OPEN
from .dynamics import STATE_DTYPE
from .errors import Disconnected, WidthMismatch, WidthTooLarge
from .graph import Graph, is_connected

COUNTEREXAMPLE_CAP = 10
LISTING_CAP = 64
DOT_WIDTH_GUARD = 12

THEOREM_MAX_N = 20
CONDITION_MAX_N = 16


@dataclass
class TransitionMap:
    width: int
    successor: np.ndarray

    def __post_init__(self):
        if len(self.successor) != 1 << self.width:
            raise ValueError("successor table must have 2**width entries")


@dataclass
class AttractorReport:
    fixed_points: list[int]
    cycles: list[tuple[int, ...]]
    tails: np.ndarray
    entry: np.ndarray
    attractor: np.ndarray
    basin_sizes: list[int]

    @property
    def cycle_lengths(self) -> list[int]:
        return [len(c) for c in self.cycles]

    @property
    def periodic(self) -> np.ndarray:
        return self.tails == 0


@dataclass
class CheckReport:
    claim: str
    graph: dict
    universe: str
    passed: bool
    counterexamples: list[int] = field(default_factory=list)
    stats: dict = field(default_factory=dict)
    seed: int | None = None

    def __post_init__(self):
        if self.passed != (not self.counterexamples):
            raise ValueError("pass must coincide with an empty counterexample list")

    def to_dict(self) -> dict:
        return {
            "claim": self.claim,
            "graph": self.graph,
            "seed": self.seed,
            "universe": self.universe,
            "pass": self.passed,
            "counterexamples": self.counterexamples,
            "stats": self.stats,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)


# -- transition maps and attractors --------------------------------------

def build_transition_map(g: Graph, gen: GeneratorMap, threads: int = 1,
                         cap: int = action.EXHAUSTIVE_CAP) -> TransitionMap:
    if gen.width != g.n:
        raise WidthMismatch(f"map width {gen.width} != graph order {g.n}")
    action.check_width(g.n, cap)
    total = 1 << g.n
    if threads <= 1 or total < 1 << 12:
        return TransitionMap(g.n, gen.table())
    bounds = np.linspace(0, total, threads + 1, dtype=np.int64)
    chunks = [np.arange(lo, hi, dtype=STATE_DTYPE) for lo, hi in zip(bounds[:-1], bounds[1:])]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        parts = list(pool.map(gen.table, chunks))
    return TransitionMap(g.n, np.concatenate(parts))


def classify_attractors(t: TransitionMap) -> AttractorReport:
    succ = t.successor
    size = len(succ)
    periodic = action.periodic_mask(succ)

    tails = np.full(size, -1, dtype=np.int64)
    tails[periodic] = 0
    entry = np.where(periodic, np.arange(size), -1)
    depth = 0
    while (tails < 0).any():
        depth += 1
        frontier = (tails < 0) & (tails[succ] == depth - 1)
        tails[frontier] = depth
        entry[frontier] = entry[succ[frontier]]

    # smallest member of each cycle by pointer doubling; 2**steps >= size covers any cycle
    rep = np.arange(size)
    jump = succ.astype(np.int64)
    for _ in range(max(1, size.bit_length())):
        rep = np.minimum(rep, rep[jump])
        jump = jump[jump]
    rep = np.where(periodic, rep, -1)

    heads = np.flatnonzero(periodic & (rep == np.arange(size)))
    cycles = []
    for h in heads.tolist():
        members = [h]
        x = int(succ[h])
        while x != h:
            members.append(x)
            x = int(succ[x])
        cycles.append(tuple(members))

    attractor_of_head = np.full(size, -1, dtype=np.int64)
    attractor_of_head[heads] = np.arange(len(heads))
    attractor = attractor_of_head[rep[entry]]
    basin_sizes = np.bincount(attractor, minlength=len(heads)).tolist()
    fixed = [c[0] for c in cycles if len(c) == 1]
    return AttractorReport(fixed, cycles, tails, entry, attractor, basin_sizes)


def export_dot(t: TransitionMap, highlight: Iterable[int] = (), name: str = "F",
               force: bool = False, max_width: int = DOT_WIDTH_GUARD) -> str:
    """DOT digraph of a transition map; highlighted states are shaded."""
    if t.width > max_width and not force:
        raise WidthTooLarge(f"{t.width} vertices gives 2**{t.width} nodes; pass force to draw anyway")
    shaded = set(int(k) for k in highlight)
    lines = [f'digraph "{name}" {{', "  node [shape=circle];"]
    for k in range(len(t.successor)):
        attrs = f'label="s_{k}"'
        if k in shaded:
            attrs += ", style=filled, fillcolor=lightgray"
        lines.append(f"  s{k} [{attrs}];")
    for k, nxt in enumerate(t.successor.tolist()):
        lines.append(f"  s{k} -> s{nxt};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- checkers -------------------------------------------------------------

def _require_checkable(g: Graph, max_n: int) -> None:
    if not is_connected(g):
        raise Disconnected(f"graph {g.name or '<unnamed>'} is disconnected; the claims assume a connected graph")
    if g.n > max_n:
        raise WidthTooLarge(f"{g.n} vertices exceeds this checker's cap of {max_n}")


def _surjective(n: int) -> np.ndarray:
    mask = np.ones(1 << n, dtype=bool)
    mask[0] = mask[-1] = False
    return mask


def _listing(mask: np.ndarray) -> dict:
    idx = np.flatnonzero(mask)
    out = {"count": int(len(idx))}
    if len(idx) <= LISTING_CAP:
        out["states"] = idx.tolist()
    return out


def _report(claim: str, g: Graph, universe: str, bad: np.ndarray | list[int], stats: dict,
            seed: int | None = None) -> CheckReport:
    bad_list = np.flatnonzero(bad).tolist() if isinstance(bad, np.ndarray) else list(bad)
    stats = dict(stats, counterexample_total=len(bad_list))
    return CheckReport(claim, g.describe(), universe, not bad_list, bad_list[:COUNTEREXAMPLE_CAP], stats, seed)


def _vacuous(claim: str, g: Graph, seed: int | None) -> CheckReport:
    return CheckReport(claim, g.describe(), "single vertex: no surjective states", True, [],
                       {"vacuous": True}, seed)


def check_theorem_main(g: Graph, seed: int | None = None) -> CheckReport:
    """Surjective periodic points of F are exactly the states with both preimages dominating."""
    claim = "theorem-main"
    _require_checkable(g, THEOREM_MAX_N)
    if g.n == 1:
        return _vacuous(claim, g, seed)
    sys = action.f_system(g)
    (f_table,) = action.transition_tables(sys).values()
    member = action.im_epsilon_mask_from_tables([f_table])
    dom = oracles.dominating_mask(g)
    both = dom & oracles.complement_mask(dom)
    surj = _surjective(g.n)
    states = np.arange(1 << g.n)
    involution = (f_table[f_table] == states) & (f_table == (states ^ g.full_mask))
    bad = surj & ((member != both) | (both & ~involution))
    return _report(claim, g, f"{int(surj.sum())} surjective states", bad, {
        "true_side": _listing(surj & member),
        "fixed_points": np.flatnonzero(f_table == states).tolist(),
    }, seed)


def check_corollary_maxindep(g: Graph, seed: int | None = None) -> CheckReport:
    """With a = F o F and b = s P_s: surjective members are exactly the maximal independent sets."""
    claim = "corollary-maxindep"
    _require_checkable(g, CONDITION_MAX_N)
    if g.n == 1:
        return _vacuous(claim, g, seed)
    member = action.im_epsilon_mask(action.independence_system(g))
    mis = oracles.maximal_independent_mask(g)
    surj = _surjective(g.n)
    bad = surj & (member != mis)
    nonsurj = [k for k in (0, g.full_mask) if member[k]]
    return _report(claim, g, f"{int(surj.sum())} surjective states", bad, {
        "true_side": _listing(surj & member),
        "non_surjective_members": nonsurj,
        "c0_member": bool(member[0]),
        "other_non_surjective_members": [k for k in nonsurj if k != 0],
    }, seed)


def check_prop_cdominating(g: Graph, c: Condition = PERFECT_OPEN, seed: int | None = None) -> CheckReport:
    """With a = F o F and b = 1 + T_s + s T_s: members are fixed points whose 1-set is C-dominating,
    and every C-dominating nonblocking set is the 1-set of a member."""
    claim = "prop-cdom"
    _require_checkable(g, CONDITION_MAX_N)
    if g.n == 1:
        return _vacuous(claim, g, seed)
    tables = action.transition_tables(action.condition_system(g, c))
    member = action.im_epsilon_mask_from_tables(tables.values())
    states = np.arange(1 << g.n)
    fixed = (tables["a"] == states) & (tables["b"] == states)
    cdom = oracles.c_dominating_mask(g, c)
    wanted = cdom & oracles.nonblocking_mask(g)
    surj = _surjective(g.n)
    bad = surj & ((member & ~(fixed & cdom)) | (wanted & ~member))
    return _report(claim, g, f"{int(surj.sum())} surjective states", bad, {
        "condition": c.name,
        "members": _listing(surj & member),
        "oracle_sets": _listing(wanted),
        "non_surjective_members": [k for k in (0, g.full_mask) if member[k]],
    }, seed)


def convergence_scan(g: Graph, seed: int | None = None, threads: int = 1) -> CheckReport:
    """Every surjective state flows under F into a surjective periodic state with both preimages dominating."""
    claim = "convergence"
    _require_checkable(g, THEOREM_MAX_N)
    if g.n == 1:
        return _vacuous(claim, g, seed)
    t = build_transition_map(g, action.f_generator(g), threads=threads)
    rep = classify_attractors(t)
    dom = oracles.dominating_mask(g)
    both = dom & oracles.complement_mask(dom)
    surj = _surjective(g.n)
    bad = surj & ~both[rep.entry]
    tails = rep.tails[surj]
    return _report(claim, g, f"{int(surj.sum())} surjective states", bad, {
        "max_tail": int(tails.max()),
        "mean_tail": round(float(tails.mean()), 6),
        "cycle_lengths": sorted(set(rep.cycle_lengths)),
    }, seed)


def check_ore_minimal(g: Graph, seed: int | None = None) -> CheckReport:
    """The complement of every minimal dominating set is dominating."""
    claim = "ore-minimal"
    _require_checkable(g, action.EXHAUSTIVE_CAP)
    if g.n == 1:
        return _vacuous(claim, g, seed)
    minimal = oracles.minimal_dominating_mask(g)
    bad = minimal & ~oracles.nonblocking_mask(g)
    return _report(claim, g, f"{1 << g.n} vertex subsets", bad,
                   {"minimal_dominating": _listing(minimal)}, seed)


def check_perfect_minimal(g: Graph, seed: int | None = None) -> CheckReport:
    """Perfect dominating implies minimal dominating implies nonblocking.

    Reported as stated. The whole vertex set, and on the 3-vertex path the
    set {v1, v2}, are perfect dominating without being minimal, so this
    claim fails on every connected graph with at least two vertices.
    """
    claim = "perfect-minimal"
    _require_checkable(g, action.EXHAUSTIVE_CAP)
    if g.n == 1:
        return _vacuous(claim, g, seed)
    perfect = oracles.c_dominating_mask(g, PERFECT_OPEN)
    minimal = oracles.minimal_dominating_mask(g)
    nonblocking = oracles.nonblocking_mask(g)
    bad = (perfect & ~minimal) | (minimal & ~nonblocking)
    return _report(claim, g, f"{1 << g.n} vertex subsets", bad, {
        "perfect": _listing(perfect),
        "perfect_not_minimal": int((perfect & ~minimal).sum()),
        "perfect_nonblocking": _listing(perfect & nonblocking),
        "perfect_nonblocking_not_minimal": int((perfect & nonblocking & ~minimal).sum()),
    }, seed)


def check_sutner_odd_closed(g: Graph, seed: int | None = None) -> CheckReport:
    """The graph has an odd-closed dominating set, and also a set meeting every N[v] oddly.

    The first form is what the condition generator detects; it always holds
    via the whole vertex set. The second is the classical parity statement.
    """
    claim = "sutner-odd-closed"
    _require_checkable(g, action.EXHAUSTIVE_CAP)
    odd_closed = oracles.c_dominating_mask(g, ODD_CLOSED)
    parity = oracles.sutner_parity_mask(g)
    bad = []
    if not odd_closed.any():
        bad.append(-1)
    if not parity.any():
        bad.append(-2)
    return _report(claim, g, f"{1 << g.n} vertex subsets", bad, {
        "odd_closed_dominating": _listing(odd_closed),
        "odd_closed_dominating_nonblocking": _listing(odd_closed & oracles.nonblocking_mask(g)),
        "parity_sets": _listing(parity),
        "counterexample_codes": {"-1": "no odd-closed dominating set", "-2": "no closed-parity set"},
    }, seed)


CLAIMS = {
    "theorem-main": check_theorem_main,
    "corollary-maxindep": check_corollary_maxindep,
    "prop-cdom": check_prop_cdominating,
    "convergence": convergence_scan,
    "ore-minimal": check_ore_minimal,
    "perfect-minimal": check_perfect_minimal,
    "sutner-odd-closed": check_sutner_odd_closed,
}
