"""Re-check the structural facts on the builtin corpus plus a small census.

Run with: python3 demos/verify_corpus.py
"""

import time

from quandles import classify, corpus


def main():
    spec = corpus.CorpusSpec(exhaustive_up_to=5)
    members = corpus.default_corpus(spec)
    print(f"Corpus: {len(members)} quandles "
          f"(24 builtins + complete census of orders 1..5).")
    start = time.monotonic()
    report = classify.verify_suite(members, corpus.builtin_groups())
    elapsed = time.monotonic() - start
    print(report.summary())
    verdict = "all facts hold" if report.ok else "FAILURES FOUND"
    print(f"\n{verdict} ({elapsed:.2f}s)")
    return 0 if report.ok else 1


if __name__ == "__main__":
    raise SystemExit(main())
