import itertools

from hypothesis import settings
from hypothesis import strategies as st

from pathcover.graph import Graph

# Numba compilation and exhaustive checks make per-example timing meaningless.
settings.register_profile("pathcover", deadline=None)
settings.load_profile("pathcover")


def graph_from_bits(n: int, code: int) -> Graph:
    pairs = list(itertools.combinations(range(n), 2))
    return Graph.from_edges(n, [p for k, p in enumerate(pairs) if code >> k & 1])


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 7) -> Graph:
    n = draw(st.integers(min_n, max_n))
    code = draw(st.integers(0, (1 << (n * (n - 1) // 2)) - 1))
    return graph_from_bits(n, code)


def labelled_graphs(n: int):
    for code in range(1 << (n * (n - 1) // 2)):
        yield graph_from_bits(n, code)


def all_path_covers(g: Graph):
    """Every path cover of ``g`` as a frozenset of paths; oracle for small n."""
    found = set()
    for perm in itertools.permutations(range(g.n)):
        for cuts in itertools.product((False, True), repeat=g.n - 1):
            paths, cur = [], [perm[0]]
            for k, v in enumerate(perm[1:]):
                if cuts[k]:
                    paths.append(tuple(cur))
                    cur = [v]
                else:
                    cur.append(v)
            paths.append(tuple(cur))
            if all(g.has_edge(a, b) for p in paths for a, b in zip(p, p[1:])):
                found.add(frozenset(p if p[0] <= p[-1] else p[::-1] for p in paths))
    return found


def hamiltonian_by_permutation(g: Graph) -> bool:
    if g.n <= 2:
        return g.n == 1 or g.has_edge(0, 1)
    for rest in itertools.permutations(range(1, g.n)):
        cyc = (0,) + rest
        if all(g.has_edge(cyc[k], cyc[(k + 1) % g.n]) for k in range(g.n)):
            return True
    return False


def permutation_canon(g: Graph) -> tuple:
    """Lexicographically least sorted edge list over all relabelings."""
    best = None
    for perm in itertools.permutations(range(g.n)):
        code = tuple(sorted(tuple(sorted((perm[u], perm[v]))) for u, v in g.edges()))
        if best is None or code < best:
            best = code
    return (g.n, best)
