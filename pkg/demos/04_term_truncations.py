"""Non-deterministic terms: superscripted symbols, truncation, parsing.

With branching degree kappa, applying a symbol to terms yields one term
per superscript. Cutting the term universe at a fixed depth gives a
finite, partial, weakly free structure whose ground is the variables.
"""

from multialg import (
    Signature,
    enumerate_terms,
    is_weakly_free,
    parse_term,
    print_term,
    term_order,
    truncate_mt,
)


def main() -> None:
    sig = Signature({"s": 1})
    for depth in range(4):
        terms = enumerate_terms(sig, ("x",), kappa=2, depth=depth)
        print(f"depth {depth}: {len(terms)} terms")

    a = truncate_mt(sig, ("x",), kappa=2, depth=2)
    print(f"truncated universe: {', '.join(a.universe)}")
    print(f"s(x) = {sorted(a.apply('s', ('x',)))}")
    deepest = max(a.universe, key=len)
    print(f"s({deepest}) defined: {a.apply('s', (deepest,)) is not None}")

    v = is_weakly_free(a)
    print(f"weakly free: {v.weakly_free}, basis {sorted(v.strong_basis)}")

    t = parse_term("s^1(s^0(x))", sig, ("x",), kappa=2)
    print(f"parsed {print_term(t)} of order {term_order(t)}")


if __name__ == "__main__":
    main()
