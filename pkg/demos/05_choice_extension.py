"""Extend a ground assignment to a full homomorphism, one choice at a time.

A map out of a weakly free structure is pinned down by where the ground
goes plus one choice inside a target result set per produced element.
Different oracles, different homomorphisms, all extending the same seed.
"""

from pathlib import Path

from multialg import (
    MultiAlgebra,
    extend_cdf,
    is_homomorphism,
    lexicographic_first,
    load_document,
    seeded_random,
)

CORPUS = Path(__file__).resolve().parent.parent / "corpus"


def main() -> None:
    forest = load_document(CORPUS / "forest.json").algebra
    # a deliberately loose target: every application allows both values
    coin = MultiAlgebra(forest.signature, ["0", "1"], {
        ("s", ("0",)): {"0", "1"},
        ("s", ("1",)): {"0", "1"},
    }, total=True)
    seed = {"x": "0"}

    for oracle in (lexicographic_first(forest, coin),
                   seeded_random(forest, coin, seed=7),
                   seeded_random(forest, coin, seed=8)):
        ext = extend_cdf(forest, seed, coin, oracle)
        pairs = ", ".join(f"{x}->{ext.map(x)}" for x in forest.universe)
        print(f"{oracle.name}: {pairs}")
        assert is_homomorphism(ext.map)
        for (symbol, args, targs, element), answer in sorted(ext.oracle.consulted.items()):
            print(f"  chose {answer} for {element} in {symbol}({','.join(args)})"
                  f" over {symbol}({','.join(targs)})")


if __name__ == "__main__":
    main()
