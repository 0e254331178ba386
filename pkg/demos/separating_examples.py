"""The separating examples between the ring classes, found automatically.

Run with: python demos/separating_examples.py
"""

from ringlab import check_property, default_corpus, search_counterexample

corpus = default_corpus()
print(f"searching a corpus of {len(corpus)} rings\n")

queries = [
    (["nj_symmetric"], "symmetric"),
    (["nj_symmetric"], "semicommutative"),
    (["melt"], "nj_symmetric"),
    (["left_quasi_duo"], "symmetric"),
    (["gws"], "nj_symmetric"),
    (["symmetric"], "nj_symmetric"),   # provably impossible: exhausts
]

for hyps, conclusion in queries:
    result = search_counterexample(hyps, conclusion, corpus)
    head = " and ".join(hyps)
    if result.ring is None:
        print(f"{head} but not {conclusion}: none "
              f"(exhausted {result.examined} rings)")
    else:
        witness = result.verdicts[conclusion].witness
        print(f"{head} but not {conclusion}: {result.ring.name}")
        print(f"    witness {witness}")
