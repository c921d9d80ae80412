import logging
import re
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Callable, Dict, List, Optional, Sequence, Tuple, Union

from ..models import ForbiddenFamily, Hypergraph, KnownValue

FANO_LINES = ((1, 2, 4), (2, 3, 5), (3, 4, 6), (4, 5, 7), (1, 5, 6), (2, 6, 7), (1, 3, 7))


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise ValueError(message)


def complete(t: int, r: int) -> Hypergraph:
    """K_t^r: every r-subset of [t]."""
    _require(t >= 0 and r >= 1, f"complete needs t >= 0 and r >= 1, got t={t}, r={r}")
    return Hypergraph.trusted(r, t, list(combinations(range(1, t + 1), r)))


def complete_minus(t: int, r: int) -> Hypergraph:
    """K_t^{r-}: K_t^r without its lexicographically last edge."""
    _require(t >= r >= 1, f"complete_minus needs t >= r >= 1, got t={t}, r={r}")
    edges = list(combinations(range(1, t + 1), r))
    return Hypergraph.trusted(r, t, edges[:-1])


def single_edge(r: int) -> Hypergraph:
    _require(r >= 1, f"single_edge needs r >= 1, got {r}")
    return complete(r, r)


def star(n: int) -> Hypergraph:
    """S_n^3(1): every triple of [n] through vertex 1."""
    _require(n >= 1, f"star needs n >= 1, got {n}")
    return Hypergraph.trusted(3, n, [(1, i, j) for i, j in combinations(range(2, n + 1), 2)])


def s2t(t: int) -> Hypergraph:
    """S_{2,t} = {12k : 3 <= k <= t+2} on t + 2 vertices."""
    _require(t >= 1, f"S_2,t needs t >= 1, got {t}")
    return Hypergraph.trusted(3, t + 2, [(1, 2, k) for k in range(3, t + 3)])


def linear_path(t: int) -> Hypergraph:
    """P_t^3 with edges {2k-1, 2k, 2k+1}, k = 1..t."""
    _require(t >= 1, f"linear_path needs t >= 1, got {t}")
    return Hypergraph.trusted(3, 2 * t + 1, [(2 * k - 1, 2 * k, 2 * k + 1) for k in range(1, t + 1)])


def linear_cycle(t: int) -> Hypergraph:
    """C_t^3 = {123, 345, ..., (2t-1)(2t)1} on 2t vertices."""
    _require(t >= 2, f"linear_cycle needs t >= 2, got {t}")
    edges = [(2 * k - 1, 2 * k, 2 * k + 1) for k in range(1, t)]
    edges.append((1, 2 * t - 1, 2 * t))
    return Hypergraph(r=3, n=2 * t, edges=edges)


def f5() -> Hypergraph:
    """The generalized triangle {123, 124, 345}."""
    return Hypergraph.trusted(3, 5, [(1, 2, 3), (1, 2, 4), (3, 4, 5)])


def o_graph(s: int) -> Hypergraph:
    """O_s on a_i = 2i - 1, b_i = 2i with edges a_i b_i a_j and a_i b_i b_j (i != j)."""
    _require(s >= 2, f"O_s needs s >= 2, got {s}")
    edges = []
    for i in range(1, s + 1):
        for j in range(1, s + 1):
            if i != j:
                edges.append((2 * i - 1, 2 * i, 2 * j - 1))
                edges.append((2 * i - 1, 2 * i, 2 * j))
    return Hypergraph(r=3, n=2 * s, edges=edges)


def fr_member(r: int, i: int) -> Hypergraph:
    """F_i^r = e1 ∪ e2 ∪ {a2, a3, 1..i, m_1..m_{r-i-2}}.

    Labels: 1..r-2 are the common core, a1, a2, a3 are r-1, r, r+1 and the
    auxiliary vertices m_k take the highest labels r+1+k.
    """
    _require(r >= 3 and 0 <= i <= r - 3, f"F_i^r needs r >= 3 and 0 <= i <= r-3, got r={r}, i={i}")
    core = tuple(range(1, r - 1))
    a1, a2, a3 = r - 1, r, r + 1
    extra = tuple(range(r + 2, r + 2 + (r - i - 2)))
    edges = [core + (a1, a2), core + (a1, a3), (a2, a3) + tuple(range(1, i + 1)) + extra]
    return Hypergraph(r=r, n=r + 1 + len(extra), edges=edges)


def f_family(r: int) -> ForbiddenFamily:
    """The family {F_0^r, ..., F_{r-3}^r}; for r = 3 it is {F5}."""
    _require(r >= 3, f"The F^r family needs r >= 3, got {r}")
    return ForbiddenFamily(members=[fr_member(r, i) for i in range(r - 2)], name=f"Fr:{r}")


def fano() -> Hypergraph:
    return Hypergraph(r=3, n=7, edges=FANO_LINES)


def good_graph_instance(base: Hypergraph, pairs: int, with_o_edges: bool = False) -> Hypergraph:
    """A 3-graph on A = V(base) plus ``pairs`` good pairs to A.

    Pair i is {n + 2i - 1, n + 2i} and gets the edges {a_i, b_i, k} for every
    k in A; with ``with_o_edges`` the O_s edges among the pairs are added.
    """
    _require(base.r == 3, "Good graphs are 3-graphs")
    _require(pairs >= 0, f"Number of pairs must be non-negative, got {pairs}")
    n = base.n
    edges = list(base.edges)
    for i in range(1, pairs + 1):
        a, b = n + 2 * i - 1, n + 2 * i
        edges.extend((k, a, b) for k in range(1, n + 1))
    if with_o_edges and pairs >= 2:
        shifted = o_graph(pairs)
        edges.extend(tuple(u + n for u in e) for e in shifted.edges)
    return Hypergraph(r=3, n=n + 2 * pairs, edges=edges)


Builder = Callable[..., Union[Hypergraph, ForbiddenFamily]]

GALLERY: Dict[str, Tuple[Builder, Tuple[str, ...], str]] = {
    "K": (complete, ("t", "r"), "complete r-graph K_t^r; t >= 0, r >= 1"),
    "Kminus": (complete_minus, ("t", "r"), "K_t^r minus its last edge; t >= r"),
    "edge": (single_edge, ("r",), "a single r-edge; r >= 1"),
    "star": (star, ("n",), "S_n^3(1), all triples through vertex 1; n >= 1"),
    "S2t": (s2t, ("t",), "S_{2,t} = {12k}; t >= 1"),
    "path": (linear_path, ("t",), "linear path P_t^3; t >= 1"),
    "cycle": (linear_cycle, ("t",), "linear cycle C_t^3; t >= 2"),
    "F5": (f5, (), "generalized triangle {123, 124, 345}"),
    "O": (o_graph, ("s",), "O_s on s pairs; s >= 2"),
    "Fr": (f_family, ("r",), "forbidden family {F_0^r, ..., F_{r-3}^r}; r >= 3"),
    "fano": (fano, (), "Fano plane, 7 points and 7 lines"),
}

_ALIASES = (
    (re.compile(r"^C(\d+)_3$"), "cycle", lambda m: (int(m.group(1)),)),
    (re.compile(r"^P(\d+)_3$"), "path", lambda m: (int(m.group(1)),)),
    (re.compile(r"^K(\d+)_(\d+)minus$"), "Kminus", lambda m: (int(m.group(1)), int(m.group(2)))),
    (re.compile(r"^K(\d+)_(\d+)$"), "K", lambda m: (int(m.group(1)), int(m.group(2)))),
    (re.compile(r"^S(\d+)_3$"), "star", lambda m: (int(m.group(1)),)),
    (re.compile(r"^O(\d+)$"), "O", lambda m: (int(m.group(1)),)),
    (re.compile(r"^F(\d+)r$"), "Fr", lambda m: (int(m.group(1)),)),
)


def parse_name(spec: str) -> Tuple[str, Tuple[int, ...]]:
    """Split "name:p1,p2" or a short alias such as "C3_3" into (name, params)."""
    text = spec.strip()
    if ":" in text:
        name, _, raw = text.partition(":")
        try:
            params = tuple(int(p) for p in raw.split(",") if p.strip())
        except ValueError as e:
            raise ValueError(f"Bad construction parameters in {spec!r}") from e
    else:
        name, params = text, ()
        for pattern, target, extract in _ALIASES:
            match = pattern.match(text)
            if match:
                name, params = target, extract(match)
                break
    if name not in GALLERY:
        raise ValueError(f"Unknown construction {name!r}; see 'construct --list'")
    expected = GALLERY[name][1]
    if len(params) != len(expected):
        raise ValueError(f"Construction {name!r} takes parameters {expected}, got {params}")
    return name, params


def build(spec: str) -> Union[Hypergraph, ForbiddenFamily]:
    name, params = parse_name(spec)
    builder = GALLERY[name][0]
    logging.debug("Building construction %s with params %s", name, params)
    return builder(*params)


def as_family(spec: str) -> ForbiddenFamily:
    built = build(spec)
    if isinstance(built, ForbiddenFamily):
        return built
    return ForbiddenFamily(members=[built], name=spec)


def gallery_listing() -> List[str]:
    return [f"{name:<8} {','.join(params) or '-':<6} {description}"
            for name, (_, params, description) in GALLERY.items()]


def lambda_complete(t: int, r: int) -> Fraction:
    """Exact λ(K_t^r) = C(t, r) / t^r (zero when t < r)."""
    if t < r or t == 0:
        return Fraction(0)
    return Fraction(comb(t, r), t ** r)


def known_lambda(name: str, params: Sequence[int] = ()) -> Optional[KnownValue]:
    """Exact Lagrangian of a named construction when it is stated or forced.

    Args:
        name (str): Gallery name ("K", "O", "edge", ...).
        params (Sequence[int]): Construction parameters.

    Returns:
        Optional[KnownValue]: The exact value with its citation, or None.
    """
    params = tuple(params)
    if name == "K" and len(params) == 2:
        t, r = params
        if (t, r) == (5, 3):
            citation = "largest Lagrangian of a C_3^3-free 3-graph: lambda(K_5^3) = 2/25"
        elif (t, r) == (4, 3):
            citation = "O_2 is isomorphic to K_4^3, so lambda(O_2) = 1/16"
        elif r == 3 and t >= 3 and t % 2 == 1:
            citation = "good-graph envelope: m = lambda(K_{2t-1}^3) = (2t-2)(2t-3)/(6(2t-1)^2)"
        elif r == 2:
            citation = "Motzkin-Straus: lambda(K_t^2) = (1 - 1/t)/2"
        else:
            citation = "perfectness floor r! lambda(K_{t-1}^r), uniform weights on K_t^r"
        return KnownValue(name=name, params=params, value=lambda_complete(t, r), citation=citation)
    if name == "O" and len(params) == 1 and params[0] >= 2:
        return KnownValue(name=name, params=params, value=Fraction(1, 16),
                          citation="every O_s has lambda(O_s) = 1/16")
    if name == "edge" and len(params) == 1 and params[0] >= 1:
        r = params[0]
        return KnownValue(name=name, params=params, value=Fraction(1, r ** r),
                          citation="single edge, forced by AM-GM at uniform weights")
    return None


def catalogue() -> List[Tuple[Hypergraph, KnownValue]]:
    """The known values checked by the golden-value ledger entries."""
    entries = [("K", (5, 3)), ("K", (4, 3))]
    entries += [("O", (s,)) for s in range(2, 6)]
    entries += [("K", (2 * t - 1, 3)) for t in range(4, 6)]
    entries += [("K", (t, 2)) for t in range(2, 9)]
    result = []
    for name, params in entries:
        known = known_lambda(name, params)
        graph = GALLERY[name][0](*params)
        result.append((graph, known))
    return result
