"""Run the weak-freeness verdict over every structure in the corpus."""

from pathlib import Path

from multialg import is_weakly_free, load_document

CORPUS = Path(__file__).resolve().parent.parent / "corpus"


def main() -> None:
    for path in sorted(CORPUS.glob("*.json")):
        doc = load_document(path)
        if doc.designated is not None:
            continue  # matrix documents star in demo 08
        v = is_weakly_free(doc.algebra)
        print(f"{path.stem}: {'weakly free' if v.weakly_free else 'not weakly free'}")
        if not v.disconnected:
            w = v.disconnected.witness
            print(f"  overlap: {w.app1} meets {w.app2} at {w.shared}")
        if not v.ground_generated:
            missing = sorted(set(doc.algebra.universe) - v.ground_generated.trace.final)
            print(f"  ground reaches everything except {{{', '.join(missing)}}}")
        if v.chain is not None:
            cycle = " -> ".join(v.chain.cycle + (v.chain.cycle[0],))
            print(f"  chain: {cycle}")
        if v.strong_basis is not None:
            print(f"  strong basis: {{{', '.join(sorted(v.strong_basis))}}}")


if __name__ == "__main__":
    main()
