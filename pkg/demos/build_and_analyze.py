"""Construct rings from expressions and inspect full analysis reports.

Run with: python demos/build_and_analyze.py
"""

from ringlab import analyze, build

for text in ("Quo(Z(8), gen(4))",
             "Corner(M(2, Z(2)), 1)",
             "SkewTrunc(Prod(Z(2), Z(2)), swap, 2)"):
    R = build(text)
    report = analyze(R)
    nj = report["properties"]["nj_symmetric"]
    print(f"{text}")
    print(f"  order {R.order}, J = {report['radicals']['jacobson']}")
    print(f"  nj_symmetric: {nj['holds']}"
          + (f", witness {nj['witness']}" if nj["witness"] else ""))
    print()
