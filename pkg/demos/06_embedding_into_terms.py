"""Every weakly free structure sits inside a truncated term multialgebra."""

from pathlib import Path

from multialg import (
    corestrict,
    direct_image,
    embed_into_terms,
    is_isomorphism,
    load_document,
)

CORPUS = Path(__file__).resolve().parent.parent / "corpus"


def main() -> None:
    a = load_document(CORPUS / "forest.json").algebra
    emb = embed_into_terms(a)
    print(f"branching degree {emb.kappa}, depth {emb.depth}")
    print(f"target holds {len(emb.target.universe)} terms")
    for x in a.universe:
        print(f"  {x} -> {emb.map(x)}")

    image = direct_image(emb.map)
    onto = corestrict(emb.map, image)
    print(f"injective: {emb.map.is_injective()}")
    print(f"isomorphic onto its image: {bool(is_isomorphism(onto))}")

    # the one not-weakly-free corpus structure is rejected with a reason
    from multialg.errors import NotWeaklyFree
    flip = load_document(CORPUS / "flip.json").algebra
    try:
        embed_into_terms(flip)
    except NotWeaklyFree as exc:
        print(f"flip refused: {exc.clause} fails")


if __name__ == "__main__":
    main()
