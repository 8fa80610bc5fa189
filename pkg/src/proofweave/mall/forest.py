"""Syntactic forests of MALL sequents with shared hypotheses, additive and
&-resolutions, and linkings.

A location is a path string: the index of a conclusion followed by ``.L`` /
``.R`` steps, e.g. ``"1.L.R"``.  Every location names both a vertex of the
forest and the edge leaving it towards the root; a hypothesis location keeps
its edge (with no source) and loses its whole sub-tree.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from ..errors import InvalidLinking, LocationClash, NoAdditiveResolution, ParseError
from ..formula import Atom, Bin, Formula, dual

KIND_OF_OP = {"*": "tensor", "@": "par", "&": "with", "+": "plus"}

Link = frozenset  # frozenset of two leaf locations
Linking = frozenset  # frozenset of links
Resolution = frozenset  # kept locations (vertices and hypothesis edges)


def child(loc: str, side: str) -> str:
    return f"{loc}.{side}"


def under(loc: str, root: str) -> bool:
    """``loc`` lies in the sub-tree rooted at ``root`` (inclusive)."""
    return loc == root or loc.startswith(root + ".")


def make_link(a: str, b: str) -> Link:
    return frozenset((a, b))


def link_key(link: Link) -> tuple[str, ...]:
    return tuple(sorted(link))


def linking_key(lam: Linking) -> tuple[tuple[str, ...], ...]:
    return tuple(sorted(link_key(x) for x in lam))


@dataclass(frozen=True)
class Forest:
    """The forest of ``hyps |- roots``; roots carry their own (global)
    locations so that sub-forests built during sequentialization share
    locations with the forest they come from."""

    roots: tuple[tuple[str, Formula], ...]
    hyps: frozenset[str] = frozenset()
    _formula: dict = field(default_factory=dict, compare=False, repr=False)
    _parent: dict = field(default_factory=dict, compare=False, repr=False)
    _order: list = field(default_factory=list, compare=False, repr=False)

    def __post_init__(self) -> None:
        seen_roots = [r for r, _ in self.roots]
        if len(set(seen_roots)) != len(seen_roots):
            raise LocationClash("duplicate root location", seen_roots)
        for a in seen_roots:
            for b in seen_roots:
                if a != b and under(a, b):
                    raise LocationClash(f"root {a!r} lies under root {b!r}", (a, b))

        def walk(loc: str, f: Formula, parent: str | None) -> None:
            self._formula[loc] = f
            self._parent[loc] = parent
            self._order.append(loc)
            if loc in self.hyps or isinstance(f, Atom):
                return
            walk(child(loc, "L"), f.left, loc)
            walk(child(loc, "R"), f.right, loc)

        for r, f in self.roots:
            walk(r, f, None)
        missing = sorted(h for h in self.hyps if h not in self._formula)
        if missing:
            raise LocationClash(f"hypothesis {missing[0]!r} is not a location of the sequent", missing[0])

    # -- construction ---------------------------------------------------------
    @staticmethod
    def of(concs: Sequence[Formula], hyps: Iterable[str] = ()) -> Forest:
        return Forest(tuple((str(i), f) for i, f in enumerate(concs)), frozenset(hyps))

    def with_roots(self, roots: Sequence[str], extra_hyps: Iterable[str] = ()) -> Forest:
        """Sub-forest on the given root locations; hypotheses are inherited
        from this forest plus ``extra_hyps``."""
        extra = set(extra_hyps)
        hs = {h for h in self.hyps | extra if any(under(h, r) for r in roots)}
        hs = {h for h in hs if not any(g != h and under(h, g) for g in hs)}
        return Forest(tuple((r, self._formula[r]) for r in roots), frozenset(hs))

    # -- inspection ----------------------------------------------------------
    def root_locs(self) -> list[str]:
        return [r for r, _ in self.roots]

    def locations(self) -> list[str]:
        """Every location with an edge: vertices and hypotheses."""
        return list(self._order)

    def vertices(self) -> list[str]:
        return [x for x in self._order if x not in self.hyps]

    def formula(self, loc: str) -> Formula:
        return self._formula[loc]

    def parent(self, loc: str) -> str | None:
        return self._parent[loc]

    def has(self, loc: str) -> bool:
        return loc in self._formula

    def kind(self, loc: str) -> str:
        if loc in self.hyps:
            return "hyp"
        f = self._formula[loc]
        return "leaf" if isinstance(f, Atom) else KIND_OF_OP[f.op]

    def leaves(self) -> list[str]:
        return [x for x in self.vertices() if self.kind(x) == "leaf"]

    def of_kind(self, *kinds: str) -> list[str]:
        return [x for x in self.vertices() if self.kind(x) in kinds]

    def premises(self, loc: str) -> tuple[str, str]:
        return child(loc, "L"), child(loc, "R")

    def root_of(self, loc: str) -> str:
        return next(r for r, _ in self.roots if under(loc, r))

    def _has_hyp(self, loc: str) -> bool:
        return any(under(h, loc) for h in self.hyps)

    def is_empty(self) -> bool:
        return not self.roots

    def __str__(self) -> str:
        left = ", ".join(sorted(self.hyps))
        right = ", ".join(f"{r}:{f}" for r, f in self.roots)
        return f"{left} |- {right}".strip()

    # -- resolutions ---------------------------------------------------------
    def _res(self, loc: str, mode: str) -> list[frozenset[str]]:
        k = self.kind(loc)
        if k in ("hyp", "leaf"):
            return [frozenset([loc])]
        a, b = self.premises(loc)
        here = frozenset([loc])
        choose = k == "with" or (k == "plus" and mode == "additive")
        if not choose:
            return [here | x | y for x in self._res(a, mode) for y in self._res(b, mode)]
        out: list[frozenset[str]] = []
        for keep, drop in ((a, b), (b, a)):
            if mode == "additive" and self._has_hyp(drop):
                continue
            out.extend(here | x for x in self._res(keep, mode))
        return out

    def resolutions(self, mode: str = "additive") -> list[Resolution]:
        """All additive resolutions (``mode="additive"``) or &-resolutions
        (``mode="with"``), each as the set of kept locations."""
        if mode not in ("additive", "with"):
            raise ValueError(f"unknown resolution mode {mode!r}")
        parts = [self._res(r, mode) for r, _ in self.roots]
        out = [frozenset().union(*combo) for combo in itertools.product(*parts)]
        if not out:
            raise NoAdditiveResolution("a hypothesis lies under both arguments of an additive connective")
        return sorted(out, key=sorted)

    def with_resolution(self, choice: dict[str, str]) -> Resolution:
        """The &-resolution keeping premise ``choice[w]`` (``"L"``/``"R"``,
        default ``"L"``) of each &-vertex ``w``."""
        kept: set[str] = set()

        def go(loc: str) -> None:
            kept.add(loc)
            k = self.kind(loc)
            if k in ("hyp", "leaf"):
                return
            a, b = self.premises(loc)
            if k == "with":
                go(a if choice.get(loc, "L") == "L" else b)
            else:
                go(a)
                go(b)

        for r, _ in self.roots:
            go(r)
        return frozenset(kept)

    def leaf_index(self) -> dict[frozenset[str], Resolution]:
        """Additive resolutions keyed by their leaf sets (which determine them)."""
        return {frozenset(x for x in res if self.kind(x) == "leaf"): res for res in self.resolutions("additive")}

    # -- linkings ------------------------------------------------------------
    def check_link(self, link: Link) -> None:
        if len(link) != 2:
            raise InvalidLinking(f"an axiom link needs two distinct leaves: {sorted(link)}", sorted(link))
        a, b = sorted(link)
        for x in (a, b):
            if not self.has(x) or self.kind(x) != "leaf":
                raise InvalidLinking(f"{x!r} is not a leaf of {self}", x)
        if self.formula(a) != dual(self.formula(b)):
            raise InvalidLinking(f"leaves {a!r} and {b!r} are not dual atoms", (a, b))


def iter_subsets(items: Sequence, min_size: int = 0) -> Iterator[tuple]:
    for k in range(min_size, len(items) + 1):
        yield from itertools.combinations(items, k)


def parse_loc(text: str) -> str:
    parts = text.split(".")
    if not parts[0].isdigit() or any(p not in ("L", "R") for p in parts[1:]):
        raise ParseError(f"bad location {text!r}")
    return text


def is_binary(f: Formula) -> bool:
    return isinstance(f, Bin)
