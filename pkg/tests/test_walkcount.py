from rivercross import McParams, mc_graph
from rivercross.digraph import Digraph, all_shortest_paths, random_digraph, shortest_distance
from rivercross.walkcount import (
    adjacency_matrix,
    count_shortest_walks,
    mat_mul,
    symbolic_adjacency,
    symbolic_shortest_paths,
)


def recursive_walk_count(g, u, target, k):
    """Oracle: count walks by explicit recursion over the remaining length."""
    if k == 0:
        return 1 if u == target else 0
    return sum(recursive_walk_count(g, v, target, k - 1) for v in g.out(u))


def complete_digraph(n):
    return Digraph.build([[j for j in range(1, n + 1) if j != i] for i in range(1, n + 1)])


class TestAdjacency:
    def test_matrix_matches_edges(self):
        g = Digraph.build([[2, 3], [3], []])
        assert adjacency_matrix(g) == [[0, 1, 1], [0, 0, 1], [0, 0, 0]]

    def test_matrix_power_counts_walks(self):
        for seed in range(6):
            g = random_digraph(8, 0.3, seed=seed)
            mat = adjacency_matrix(g)
            power = mat
            for k in range(1, 9):
                if k > 1:
                    power = mat_mul(power, mat)
                for s in (1, 4):
                    for t in (2, 8):
                        assert power[s - 1][t - 1] == recursive_walk_count(g, s, t, k)

    def test_power_on_complete_graph(self):
        g = complete_digraph(5)
        mat = adjacency_matrix(g)
        power = mat
        for k in range(2, 7):
            power = mat_mul(power, mat)
        assert power[0][1] == recursive_walk_count(g, 1, 2, 6)


class TestCountShortestWalks:
    def test_classic_instance(self):
        g, _ = mc_graph(McParams(3, 3, 2, 0))
        assert count_shortest_walks(g, 1, g.n) == (11, 4)

    def test_five_five_boat_three(self):
        g, _ = mc_graph(McParams(5, 5, 3, 0))
        k, count = count_shortest_walks(g, 1, g.n)
        assert count == 25
        assert k == shortest_distance(g, 1, g.n)

    def test_complete_graph_one_step(self):
        g = complete_digraph(4)
        assert count_shortest_walks(g, 1, 4) == (1, 1)

    def test_unreachable_is_none(self):
        g = Digraph.build([[], [1]])
        assert count_shortest_walks(g, 1, 2) is None

    def test_first_power_matches_bfs_distance(self):
        for seed in range(10):
            g = random_digraph(12, 0.25, seed=seed)
            expected = shortest_distance(g, 1, 12)
            got = count_shortest_walks(g, 1, 12)
            if expected is None or expected == 0:
                continue
            assert got is not None and got[0] == expected

    def test_count_matches_enumeration(self):
        for seed in (1, 7, 42, 99, 123):
            g = random_digraph(30, 0.2, seed=seed)
            found = all_shortest_paths(g, 1, 30)
            got = count_shortest_walks(g, 1, 30)
            if found is None:
                assert got is None
            else:
                assert got == (found.length, len(found.paths))

    def test_exact_beyond_64_bits(self):
        width, layers = 8, 22
        rows = [tuple(range(2, 2 + width))]
        for layer in range(layers - 1):
            base = 2 + (layer + 1) * width
            rows.extend(tuple(range(base, base + width)) for _ in range(width))
        n = width * layers + 2
        rows.extend((n,) for _ in range(width))
        rows.append(())
        g = Digraph.build(rows)
        k, count = count_shortest_walks(g, 1, n)
        assert k == layers + 1
        assert count == width**layers  # independent product formula for a layered graph
        assert count > 2**64


class TestSymbolic:
    def test_single_edge_entry(self):
        g = Digraph.build([[2], []])
        mat = symbolic_adjacency(g)
        assert mat[0][1] == {((1, 2),): 1}
        assert symbolic_shortest_paths(g, 1, 2).paths == ((1, 2),)

    def test_classic_reconstruction(self):
        g, _ = mc_graph(McParams(3, 3, 2, 0))
        sym = symbolic_shortest_paths(g, 1, g.n)
        assert sym == all_shortest_paths(g, 1, g.n)
        assert sym.length == 11 and len(sym.paths) == 4

    def test_matches_enumeration_on_random_graphs(self):
        for seed in range(8):
            g = random_digraph(12, 0.3, seed=seed)
            assert symbolic_shortest_paths(g, 1, 12) == all_shortest_paths(g, 1, 12)

    def test_unreachable_is_none(self):
        g = Digraph.build([[], [1]])
        assert symbolic_shortest_paths(g, 1, 2) is None

    def test_minimal_power_monomials_have_unit_coefficients(self):
        g, _ = mc_graph(McParams(3, 3, 2, 0))
        k, _ = count_shortest_walks(g, 1, g.n)
        n = g.n
        row = [dict() for _ in range(n)]
        row[0] = {(): 1}
        for _ in range(k):
            nxt = [dict() for _ in range(n)]
            for i0, entry in enumerate(row):
                for j in g.out(i0 + 1):
                    cell = nxt[j - 1]
                    for mono, coeff in entry.items():
                        grown = tuple(sorted(mono + ((i0 + 1, j),)))
                        cell[grown] = cell.get(grown, 0) + coeff
            row = nxt
        assert set(row[n - 1].values()) == {1}
