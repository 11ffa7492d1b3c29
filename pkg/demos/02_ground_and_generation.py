"""Where elements come from: build sets, grounds, and staged generation.

The build of a structure is everything some application can produce; the
ground is the rest, the analogue of variables in a term algebra. Closing
the ground under all defined applications, stage by stage, shows exactly
which elements are reachable and how early.
"""

from pathlib import Path

from multialg import b_order, build, generate, ground, load_document

CORPUS = Path(__file__).resolve().parent.parent / "corpus"


def main() -> None:
    a = load_document(CORPUS / "shared_tail.json").algebra
    print(f"universe: {', '.join(a.universe)}")
    for app, result in a.applications():
        print(f"  {app.symbol}({','.join(app.args)}) = {{{', '.join(sorted(result))}}}")

    print(f"build:  {sorted(build(a))}")
    print(f"ground: {sorted(ground(a))}")

    trace = generate(a, ground(a))
    for i, stage in enumerate(trace.stages):
        print(f"stage {i}: {sorted(stage)}")
    print(f"everything reached: {trace.final == frozenset(a.universe)}")

    for x in a.universe:
        producer = trace.producer.get(x)
        how = "seed" if producer is None else \
            f"{producer.symbol}({','.join(producer.args)}) at stage {producer.stage}"
        print(f"  {x}: order {b_order(a, ground(a), x)}, from {how}")


if __name__ == "__main__":
    main()
