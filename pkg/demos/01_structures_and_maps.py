"""Build two small multialgebras by hand and compare them with maps."""

from multialg import (
    ElementMap,
    MultiAlgebra,
    Signature,
    is_full_homomorphism,
    is_homomorphism,
    is_isomorphism,
    validate,
)


def main() -> None:
    sig = Signature({"s": 1})

    flip = MultiAlgebra(sig, ["-1", "1"], {
        ("s", ("-1",)): {"1"},
        ("s", ("1",)): {"-1"},
    }, total=True)
    report = validate(flip)
    print(f"flip validates: {report.ok}, total: {flip.total}")
    print(f"s(-1) = {sorted(flip.apply('s', ('-1',)))}")

    # the swap is an automorphism, the identity is one too
    swap = ElementMap(flip, flip, {"-1": "1", "1": "-1"})
    print(f"swap is a homomorphism:  {bool(is_homomorphism(swap))}")
    print(f"swap is full:            {bool(is_full_homomorphism(swap))}")
    print(f"swap is an isomorphism:  {bool(is_isomorphism(swap))}")

    collapse = MultiAlgebra(sig, ["0", "1"], {
        ("s", ("0",)): {"1"},
        ("s", ("1",)): {"1"},
    }, total=True)
    onto_one = ElementMap(collapse, collapse, {"0": "1", "1": "1"})
    check = is_homomorphism(onto_one)
    print(f"constant map on collapse is a homomorphism: {bool(check)}")

    broken = ElementMap(flip, collapse, {"-1": "0", "1": "1"})
    check = is_homomorphism(broken)
    w = check.witness
    print(f"flip -> collapse via -1->0, 1->1: {bool(check)}")
    print(f"  witness: {w.element} of s({','.join(w.args)}) lands at {w.image}")


if __name__ == "__main__":
    main()
