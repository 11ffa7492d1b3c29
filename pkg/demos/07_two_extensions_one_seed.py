"""Why plain set maps do not extend uniquely: two homomorphisms, one seed.

Term structures with branching lose the universal mapping property of
classical term algebras. Both maps below send each variable to itself,
both respect every application, and they disagree on every composite.
"""

from multialg import Signature, ump_refutation_demo


def main() -> None:
    demo = ump_refutation_demo(Signature({"s": 1}), ("x",), depth=3)
    report = demo.report
    width = max(len(row[0]) for row in report.rows)
    print(f"{'term'.ljust(width)}  first map           second map")
    for term, left, right in report.rows:
        print(f"{term.ljust(width)}  {left.ljust(18)}  {right}")
    print(f"agree on variables:    {report.agree_on_variables}")
    print(f"differ on composites:  {report.differ_on_all_composites}")
    print(f"both homomorphisms:    {report.both_homomorphisms}")


if __name__ == "__main__":
    main()
