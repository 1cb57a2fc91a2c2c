"""Normalization traces: auditable, serializable, replayable.

normalize() returns the normal form together with the full chain of
rewrite steps.  The chain serializes to JSON, and replay() re-executes
every step, verifying each recorded intermediate word exactly.  A
tampered trace is caught at the first bad step.
"""

from surfword import ReplayMismatch, RewriteStep, Trace, normalize, parse, replay


def main() -> None:
    word = parse("c a b a' c x b")
    form, trace = normalize(word)
    print(f"word: {word}")
    print(f"form: {form}")
    print()
    print("trace:")
    for step in trace:
        print(f"  {step.describe()}")

    print()
    final = replay(word, trace)
    print(f"replay result: {final.render()!r} (residual word of the last hole)")

    text = trace.to_json(indent=2)
    revived = Trace.from_json(text)
    print(f"JSON round trip intact: {revived == trace}")

    # tamper with one recorded output and watch replay object
    first = trace[0]
    forged = RewriteStep(first.rule, first.params, first.before, first.before)
    try:
        replay(word, Trace([forged]))
    except ReplayMismatch as exc:
        print(f"tampering detected: {exc}")


if __name__ == "__main__":
    main()
