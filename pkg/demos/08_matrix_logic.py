"""Formulas over multialgebra matrices: legal valuations, tautologies, entailment."""

from pathlib import Path

from multialg import entails, is_tautology, legal_valuations, load_document, parse_formula

CORPUS = Path(__file__).resolve().parent.parent / "corpus"


def main() -> None:
    classical = load_document(CORPUS / "classical.json").to_nmatrix()
    sig = classical.algebra.signature

    for text in ("or(p,not(p))", "implies(p,implies(q,p))", "or(p,q)"):
        phi = parse_formula(text, sig)
        verdict = is_tautology(phi, classical)
        if verdict:
            print(f"{text}: tautology")
        else:
            bad = ", ".join(f"{k}={v}" for k, v in sorted(verdict.witness.items()))
            print(f"{text}: refuted by {bad}")

    premises = [parse_formula(t, sig) for t in ("p", "implies(p,q)")]
    conclusion = parse_formula("q", sig)
    print(f"modus ponens holds: {bool(entails(premises, conclusion, classical))}")

    # a non-deterministic disjunction: or(p,p) can float free of p
    nondet = load_document(CORPUS / "twovalued_nondet.json").to_nmatrix()
    phi = parse_formula("or(p,p)", nondet.algebra.signature)
    vals = list(legal_valuations(phi, nondet))
    print(f"or(p,p) admits {len(vals)} legal valuations:")
    for v in vals:
        print(f"  p={v['p']}  or(p,p)={v['or(p,p)']}")
    print(f"or(p,p) a tautology here: {bool(is_tautology(phi, nondet))}")


if __name__ == "__main__":
    main()
