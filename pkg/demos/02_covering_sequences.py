"""Covering sequences: what they are and how the toolkit finds them.

A pattern admits a radius budget (r1, ..., r_tau) when its nodes can be
peeled off one at a time with the i-th peeled node staying within
distance r_i of every remaining node, measured inside the remaining
induced subgraph.  The budget drives the pooling encoder: smaller first
radii mean smaller screened neighborhoods and cheaper encodings.
"""

from rnpkit import (
    Graph,
    admits,
    complete,
    covering_distance,
    cycle,
    default_covering_sequence,
    enumerate_connected_graphs,
    family_covering_sequence,
    is_vertex_covering_sequence,
    min_r1_covering_sequence,
    path,
    star,
)


def show(name, g):
    radii, order = min_r1_covering_sequence(g)
    valid = is_vertex_covering_sequence(g, order, radii)
    print(f"  {name:14s} radii {str(radii):12s} order {order}  valid={valid}")


def main() -> None:
    print("Every connected k-node graph admits the default budget (k-1, ..., 1):")
    for k in (3, 4, 5):
        budget = default_covering_sequence(k)
        all_admit = all(admits(g, budget) is not None for g in enumerate_connected_graphs(k))
        print(f"  k={k}: budget {budget}, all {len(enumerate_connected_graphs(k))} classes admit it: {all_admit}")

    print("\nBut the first radius can often be much smaller.  The minimum-r1")
    print("construction sorts nodes by eccentricity, forces the best candidate")
    print("to be a spanning-tree leaf via edge weights, then peels tree leaves:")
    show("triangle", complete(3))
    show("4-path", path(4))
    show("4-cycle", cycle(4))
    show("3-star", star(3))

    print("\nNote the 4-path: its centers have eccentricity 2 but can never be")
    print("spanning-tree leaves, so the construction falls through to an")
    print("endpoint and r1 = 3.")

    print("\nBudgets need not decrease.  Peel the hub of a fan over a 5-path")
    print("first and the leftover path stretches the later radii:")
    hub_over_path = Graph.from_edges(
        6, [(0, 1), (1, 2), (2, 3), (3, 4)] + [(5, v) for v in range(5)]
    )
    order = (5, 0, 1, 2, 3, 4)
    members = set(order)
    tight = []
    for v in order[:-1]:
        tight.append(covering_distance(hub_over_path, v, members))
        members.remove(v)
    print(f"  tight per-step radii along {order}: {tuple(tight)}")

    print("\nA family of patterns shares the coordinate-wise max of their")
    print("budgets (shorter ones padded with trailing zeros):")
    family = [complete(3), path(3), path(4), star(3), cycle(4)]
    budget = family_covering_sequence(family)
    print(f"  family budget for all connected 3-4 node patterns: {budget}")
    for g, name in zip(family, ["triangle", "3-path", "4-path", "3-star", "4-cycle"]):
        print(f"    {name:10s} admits it: {admits(g, budget) is not None}")


if __name__ == "__main__":
    main()
