"""The partitioned-path normalization procedure, step by step.

A partitioned m-path carries an A/B label per position; the quantity of
interest is the number of same-side pairs within path distance m.  The
normalization rewrites the maximal runs x_1..x_q until

    (a) every run has size <= m, and
    (b) consecutive runs sum to >= m,

changing the same-side edge count by at most (m-1)^2/2 in total.  In normal
form the count has a closed form, which is how the same-side edge floor
d * L - 2m^2 is proved; here we watch the rewriting work and check the floor
exhaustively at small lengths.
"""

from hampower.partitioned_paths import (
    PartitionedPath,
    check_edge_floor_exhaustive,
    normalize,
    normalized_edge_closed_form,
    same_side_edge_count,
    same_side_edge_floor,
    segments,
)

def show(m: int, labels: str) -> None:
    p = PartitionedPath(m, labels)
    res = normalize(p)
    print(f"m={m}  input {labels!r}  runs {segments(p).sizes}")
    for step in res.transcript:
        print(f"    {step.op:<12} at segment {step.index}: {step.before} -> {step.after}")
    if not res.transcript:
        print("    already normal")
    print(f"    result runs {res.segments.sizes} starting on side {res.segments.first_side}")
    print(f"    same-side edges: {res.original_edges} -> {res.normalized_edges} "
          f"(slack {res.slack}, allowed {(m - 1) ** 2 / 2:g})")
    closed = normalized_edge_closed_form(res.segments, m)
    direct = same_side_edge_count(res.segments.to_path(m))
    print(f"    closed form {closed} == direct recount {direct}")
    print()


print("=== single oversized run: trimmed front to back ===")
show(3, "AAAAABB")

print("=== a too-small prefix is absorbed ===")
show(3, "ABAAAA")

print("=== pull-across repairs, then a final merge ===")
show(4, "AAABABBB")

print("=== an emptied singleton fuses its neighbors ===")
show(4, "AAAABABAAAA")

print("=== the same-side edge floor, exhaustively at small lengths ===")
for m in (2, 3):
    rows = check_edge_floor_exhaustive(m, 14)
    worst = min(
        (r for r in rows if r.min_edges is not None),
        key=lambda r: r.min_edges - r.floor,
    )
    print(f"m={m}: every valid labeling up to L=14 meets the floor; tightest at "
          f"L={worst.L}: {worst.min_edges} >= {worst.floor} "
          f"(minimizer {worst.minimizer})")
    assert all(r.ok for r in rows)

print()
print("floor values grow linearly: for m=5,",
      "L=100 guarantees", same_side_edge_floor(5, 100), "same-side edges.")
