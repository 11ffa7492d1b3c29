"""Directed graphs are one-operation multialgebras; cycles are chains."""

from multialg import (
    GraphDocument,
    find_chain,
    graph_to_dot,
    graph_to_multialgebra,
    is_weakly_free,
    multialgebra_to_graph,
)


def main() -> None:
    g = GraphDocument(
        vertices=("back", "hub", "left", "right"),
        arrows=(("back", "hub"), ("hub", "left"), ("hub", "right"), ("right", "back")),
    )
    a = graph_to_multialgebra(g)
    print(f"successors of hub: {sorted(a.apply('s', ('hub',)))}")

    w = find_chain(a)
    cycle = " -> ".join(w.cycle + (w.cycle[0],))
    print(f"cycle found: {cycle}")
    print(f"weakly free: {is_weakly_free(a).weakly_free}")

    # drop the back edge and the verdict turns around
    acyclic = GraphDocument(g.vertices, g.arrows[1:])
    v = is_weakly_free(graph_to_multialgebra(acyclic))
    print(f"without back->hub: weakly free {v.weakly_free}, "
          f"basis {sorted(v.strong_basis)}")

    assert multialgebra_to_graph(a) == g
    print(graph_to_dot(acyclic), end="")


if __name__ == "__main__":
    main()
