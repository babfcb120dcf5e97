"""Enumerate all small quandles up to isomorphism and profile each class.

Run with: python3 demos/census.py [max_order]
"""

import sys

from quandles import classify, corpus


def _fmt(degree):
    return "-" if degree is None else str(degree)


def main(max_order=5):
    print(f"{'order':>5}  {'label':<10} {'connected':<9} {'medial':<6} "
          f"{'red':>4} {'lr':>4} {'tos':>4}  orbit sizes")
    for n in range(1, max_order + 1):
        found = corpus.enumerate_quandles(n)
        for q in found:
            rep = classify.classify(q)
            sizes = " ".join(str(s) for s in rep.orbit_sizes)
            print(f"{n:>5}  {q.label:<10} {str(rep.connected):<9} "
                  f"{str(rep.medial):<6} {_fmt(rep.reductive_degree):>4} "
                  f"{_fmt(rep.locally_reductive_degree):>4} "
                  f"{_fmt(rep.tos_degree):>4}  {sizes}")
        plural = "class" if len(found) == 1 else "classes"
        print(f"       ({len(found)} {plural} of order {n})")


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 5)
