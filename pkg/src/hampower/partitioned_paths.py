"""Partitioned m-paths: segments, same-side edge counts, and normalization.

A partitioned path is the m-th power of a path whose vertices carry an A/B
side label; it is valid when no m+1 consecutive vertices share a side.  The
object of interest is the number of same-side edges (pairs at path distance
at most m with equal labels).

normalize() runs the iterative rewriting procedure that turns any valid
labeling into one whose maximal runs x_1..x_q satisfy

    (a) x_i <= m for all i, and
    (b) x_i + x_{i+1} >= m for consecutive i,

while increasing the same-side edge count by at most (m-1)^2/2 in total.  In
that normal form the same-side edge count has the closed form

    sum_i C(x_i, 2)  +  sum_{interior i} (m - x_i)(m - x_i + 1)/2,

which is bounded below by same_side_edge_floor(m, L) = d*L - 2m^2 where d is
the optimal limiting braid density for power m.  The exhaustive checker
verifies that floor directly against every valid labeling at small lengths.

Also here: t-far edge counters and the structural checks used for the
powers m = 6 (clique-number 4 labelings) and m = 9 (clique-number 6).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .thresholds import braid_density_limit, optimal_ell

SIDE_A = "A"
SIDE_B = "B"
_OTHER = {SIDE_A: SIDE_B, SIDE_B: SIDE_A}


class BudgetExceeded(RuntimeError):
    """The normalization step budget (4*L^2) was exhausted."""


@dataclass(frozen=True)
class PartitionedPath:
    """An m-path with an A/B labeling of its positions."""

    m: int
    labels: str

    def __post_init__(self):
        if self.m < 1:
            raise ValueError(f"power must be >= 1, got {self.m}")
        bad = set(self.labels) - {SIDE_A, SIDE_B}
        if bad:
            raise ValueError(f"labels must be A/B strings, found {sorted(bad)}")

    @property
    def L(self) -> int:
        return len(self.labels)

    def is_valid(self) -> bool:
        """No m+1 consecutive positions on the same side."""
        run = 0
        prev = None
        for c in self.labels:
            run = run + 1 if c == prev else 1
            prev = c
            if run > self.m:
                return False
        return True

    def positions(self, side: str) -> list[int]:
        return [i for i, c in enumerate(self.labels) if c == side]


@dataclass(frozen=True)
class SegmentList:
    """Maximal same-side runs of a partitioned path, alternating sides."""

    sizes: tuple[int, ...]
    first_side: str

    def __post_init__(self):
        if any(x < 1 for x in self.sizes):
            raise ValueError("segment sizes must be positive")
        if self.first_side not in (SIDE_A, SIDE_B):
            raise ValueError("first_side must be A or B")

    @property
    def total(self) -> int:
        return sum(self.sizes)

    def side(self, i: int) -> str:
        return self.first_side if i % 2 == 0 else _OTHER[self.first_side]

    def to_labels(self) -> str:
        return "".join(self.side(i) * x for i, x in enumerate(self.sizes))

    def to_path(self, m: int) -> PartitionedPath:
        return PartitionedPath(m, self.to_labels())

    def is_normalized(self, m: int) -> bool:
        if any(x > m for x in self.sizes):
            return False
        return all(
            self.sizes[i] + self.sizes[i + 1] >= m for i in range(len(self.sizes) - 1)
        )


def segments(path: PartitionedPath) -> SegmentList:
    """Run-length decomposition into maximal same-side segments."""
    if not path.labels:
        raise ValueError("cannot decompose an empty labeling")
    sizes = []
    run = 1
    for prev, cur in zip(path.labels, path.labels[1:]):
        if cur == prev:
            run += 1
        else:
            sizes.append(run)
            run = 1
    sizes.append(run)
    return SegmentList(tuple(sizes), path.labels[0])


# ---------------------------------------------------------------------------
# Same-side edge counting


def same_side_edge_count(path: PartitionedPath) -> int:
    """Number of pairs at path distance <= m with equal labels (fast bit count)."""
    L = path.L
    x = 0
    for i, c in enumerate(path.labels):
        if c == SIDE_B:
            x |= 1 << i
    total = 0
    for d in range(1, min(path.m, L - 1) + 1):
        agree = ~(x ^ (x >> d)) & ((1 << (L - d)) - 1)
        total += agree.bit_count()
    return total


def same_side_edges(path: PartitionedPath) -> tuple[int, list[tuple[int, int]]]:
    """Same-side edge count together with the explicit position pairs."""
    pairs = []
    L = path.L
    labels = path.labels
    for i in range(L):
        for j in range(i + 1, min(i + path.m, L - 1) + 1):
            if labels[i] == labels[j]:
                pairs.append((i, j))
    return len(pairs), pairs


def normalized_edge_closed_form(seg: SegmentList, m: int) -> int:
    """Same-side edges of a normalized segment list, in closed form.

    Within-segment: C(x_i, 2) each (complete, since x_i <= m).  Across: all
    cross edges join segments two apart, and the count between S_{i-1} and
    S_{i+1} depends only on the middle size: (m - x_i)(m - x_i + 1)/2.
    Requires the list to satisfy (a) and (b).
    """
    if not seg.is_normalized(m):
        raise ValueError("closed form only applies to normalized segment lists")
    sizes = seg.sizes
    total = sum(comb(x, 2) for x in sizes)
    for i in range(1, len(sizes) - 1):
        gap = m - sizes[i]
        total += gap * (gap + 1) // 2
    return total


def same_side_edge_floor(m: int, L: int) -> Fraction:
    """The guaranteed same-side edge count d*L - 2m^2 for valid labelings,
    where d is the optimal limiting braid density for power m."""
    if m < 2:
        raise ValueError(f"power must be >= 2, got {m}")
    if L < 1:
        raise ValueError(f"length must be >= 1, got {L}")
    return braid_density_limit(m, optimal_ell(m)) * L - 2 * m * m


# ---------------------------------------------------------------------------
# Normalization procedure


@dataclass(frozen=True)
class NormalizeStep:
    op: str                      # init-split | init-merge | case1 | case2-shift | case2-merge | case3
    index: int                   # segment index the operation acted at
    before: tuple[int, ...]
    after: tuple[int, ...]


@dataclass
class NormalizeResult:
    segments: SegmentList
    transcript: list[NormalizeStep]
    original_edges: int
    normalized_edges: int
    steps: int

    @property
    def slack(self) -> int:
        """normalized - original same-side edges; at most (m-1)^2/2 by construction."""
        return self.normalized_edges - self.original_edges


def normalize(path: PartitionedPath, budget: int | None = None) -> NormalizeResult:
    """Rewrite a valid labeling into normal form ((a) and (b) above).

    The procedure scans segments left to right.  Oversized segments push
    their tail into the next segment (changing those vertices' side); when
    two consecutive segments are jointly too small, single vertices are
    pulled across from the right (changing the order, not the partition)
    until the pair is repaired, merging segments as they empty; a jointly
    too-small final pair is merged outright and the procedure stops.

    Valid labelings (no m+1 consecutive same-side vertices) are the inputs
    of interest, but the procedure is total: oversized runs are trimmed by
    the initiation split and the oversize case, and the edge accounting
    below holds either way.

    The default step budget is 4*L^2; exceeding it raises BudgetExceeded
    (that would be a finding, not an expected outcome).  The returned result
    carries a transcript and both edge counts; the accounting guarantee
    original >= normalized - (m-1)^2/2 is re-verified here on every run by
    recounting edges of the reconstructed normalized labeling.
    """
    m = path.m
    L = path.L
    if budget is None:
        budget = 4 * L * L
    original = same_side_edge_count(path)

    seg = segments(path)
    sizes = list(seg.sizes)
    first = seg.first_side
    transcript: list[NormalizeStep] = []
    steps = 0

    def spend():
        nonlocal steps
        steps += 1
        if steps > budget:
            raise BudgetExceeded(f"normalization exceeded {budget} steps at L={L}, m={m}")

    def log(op: str, idx: int, before: tuple[int, ...]):
        transcript.append(NormalizeStep(op, idx, before, tuple(sizes)))

    def split(idx: int, op: str):
        # keep the first m vertices of segment idx, push the rest rightwards
        before = tuple(sizes)
        over = sizes[idx] - m
        sizes[idx] = m
        if idx + 1 < len(sizes):
            sizes[idx + 1] += over
        else:
            sizes.append(over)
        log(op, idx, before)

    # Initiation: cap the first segment, then absorb a too-small prefix.
    if sizes[0] > m:
        spend()
        split(0, "init-split")
    acc = 0
    j = 0
    for x in sizes:
        if acc + x < m:
            acc += x
            j += 1
        else:
            break
    if j >= 2:
        spend()
        before = tuple(sizes)
        merged = sum(sizes[:j])
        new_first = first if (j - 1) % 2 == 0 else _OTHER[first]
        sizes[:j] = [merged]
        first = new_first
        log("init-merge", 0, before)

    # Iteration: segments 0..i-1 satisfy (a) and (b); examine segment i.
    i = 1
    while i < len(sizes):
        spend()
        if sizes[i] > m:
            split(i, "case1")
            i += 1
        elif sizes[i - 1] + sizes[i] < m:
            if i + 1 < len(sizes):
                before = tuple(sizes)
                sizes[i - 1] += 1
                sizes[i + 1] -= 1
                if sizes[i + 1] == 0:
                    del sizes[i + 1]
                    if i + 1 < len(sizes):
                        # the emptied slot's right neighbor shares segment i's side
                        sizes[i] += sizes.pop(i + 1)
                        log("case2-merge", i, before)
                    else:
                        log("case2-shift", i, before)
                else:
                    log("case2-shift", i, before)
                # stay at i and re-check
            else:
                before = tuple(sizes)
                sizes[i - 1] += sizes.pop(i)
                log("case3", i, before)
                break
        else:
            i += 1  # case 0: conditions hold, move on

    out = SegmentList(tuple(sizes), first)
    if not out.is_normalized(m):
        raise AssertionError(f"normalization produced a non-normal list {out}")
    normalized = same_side_edge_count(out.to_path(m))
    if 2 * (normalized - original) > (m - 1) ** 2:
        raise AssertionError(
            f"edge accounting violated: slack {normalized - original} "
            f"exceeds (m-1)^2/2 for m={m}, labels={path.labels!r}"
        )
    return NormalizeResult(out, transcript, original, normalized, steps)


# ---------------------------------------------------------------------------
# Exhaustive verification of the edge floor


@dataclass(frozen=True)
class EdgeFloorRow:
    L: int
    num_valid: int
    min_edges: int | None
    floor: Fraction
    ok: bool
    minimizer: str | None


def _has_run(x: int, k: int) -> bool:
    r = x
    for _ in range(k - 1):
        r &= r >> 1
    return r != 0


def iter_valid_label_masks(L: int, m: int):
    """All side-label bitmasks of length L with no m+1 consecutive equal bits."""
    full = (1 << L) - 1
    for x in range(1 << L):
        if not _has_run(x, m + 1) and not _has_run(~x & full, m + 1):
            yield x


def _mask_edge_count(x: int, L: int, m: int) -> int:
    total = 0
    for d in range(1, min(m, L - 1) + 1):
        agree = ~(x ^ (x >> d)) & ((1 << (L - d)) - 1)
        total += agree.bit_count()
    return total


def mask_to_labels(x: int, L: int) -> str:
    return "".join(SIDE_B if (x >> i) & 1 else SIDE_A for i in range(L))


def check_edge_floor_exhaustive(m: int, L_max: int) -> list[EdgeFloorRow]:
    """For every valid labeling of every length L <= L_max, verify that the
    same-side edge count meets same_side_edge_floor(m, L); reports the
    minimizing labeling per L (first in mask order among ties)."""
    if m < 2:
        raise ValueError(f"power must be >= 2, got {m}")
    rows = []
    for L in range(1, L_max + 1):
        floor = same_side_edge_floor(m, L)
        best = None
        best_mask = None
        count = 0
        for x in iter_valid_label_masks(L, m):
            count += 1
            e = _mask_edge_count(x, L, m)
            if best is None or e < best:
                best = e
                best_mask = x
        ok = best is None or best >= floor
        rows.append(
            EdgeFloorRow(
                L,
                count,
                best,
                floor,
                ok,
                None if best_mask is None else mask_to_labels(best_mask, L),
            )
        )
    return rows


# ---------------------------------------------------------------------------
# t-far edges and the structural checks for powers 6 and 9


def far_pair_count(path: PartitionedPath, side: str, t: int) -> int:
    """Number of t-far same-side pairs: exactly t-1 same-side vertices between."""
    if t < 1:
        raise ValueError(f"t must be >= 1, got {t}")
    return max(0, len(path.positions(side)) - t)


def far_edges(path: PartitionedPath, side: str, t: int) -> int:
    """Number of t-far same-side pairs that are also edges (path distance <= m)."""
    if t < 1:
        raise ValueError(f"t must be >= 1, got {t}")
    pos = path.positions(side)
    return sum(1 for a, b in zip(pos, pos[t:]) if b - a <= path.m)


def spanning_power_check(path: PartitionedPath, side: str, k: int) -> bool:
    """True iff every t-far pair on the side with t <= k is an edge of the path.

    Equivalently, the side induces the k-th power of a path as a spanning
    subgraph.
    """
    pos = path.positions(side)
    for t in range(1, min(k, len(pos) - 1) + 1):
        if any(b - a > path.m for a, b in zip(pos, pos[t:])):
            return False
    return True


def window_side_counts(path: PartitionedPath, width: int) -> list[tuple[int, int]]:
    """(count_A, count_B) for every window of `width` consecutive positions."""
    counts = []
    labels = path.labels
    for i in range(path.L - width + 1):
        w = labels[i : i + width]
        a = w.count(SIDE_A)
        counts.append((a, width - a))
    return counts


def clique_free(path: PartitionedPath, clique_size: int) -> bool:
    """No `clique_size` same-side vertices pairwise within path distance m.

    Such a clique exists iff some window of m+1 consecutive positions holds
    clique_size same-side vertices.
    """
    width = path.m + 1
    for a, b in window_side_counts(path, width):
        if a >= clique_size or b >= clique_size:
            return False
    return True


@dataclass
class M6Report:
    """Structural counts for one valid labeling of a 6-path with no same-side K_5."""

    L: int
    precondition_ok: bool
    a_count: int = 0
    b_count: int = 0
    far12_edges: int = 0
    far12_expected: int = 0         # per-side sum of max(0, |Z| - t), t <= 2
    far3_edges: int = 0
    windows_ok: bool = False        # every 7-window splits 4/3
    spans_ok: bool = False          # both sides carry spanning 2-paths
    identity_ok: bool = False       # far12 == expected (== 2L-6 when both sides >= 2)
    identity_2l6: bool = False
    far3_bound_ok: bool = False     # far3 >= (L-6)/4
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return (
            self.precondition_ok
            and self.windows_ok
            and self.spans_ok
            and self.identity_ok
            and self.far3_bound_ok
        )


def m6_structure_check(path: PartitionedPath) -> M6Report:
    """The m = 6 structure facts for labelings without a same-side K_5.

    Asserted: every 7-window splits 4/3, both sides span 2-paths, the 1- and
    2-far edges number exactly sum max(0, |Z|-t) (which is 2L-6 once both
    sides have >= 2 vertices; always the case for L >= 7), and the 3-far
    edges number at least (L-6)/4.  A violated precondition is reported, not
    asserted.
    """
    if path.m != 6:
        raise ValueError(f"this check applies to 6-paths, got m={path.m}")
    rep = M6Report(L=path.L, precondition_ok=path.is_valid() and clique_free(path, 5))
    if not rep.precondition_ok:
        rep.notes.append("precondition violated: invalid labeling or same-side K_5 present")
        return rep

    rep.a_count = len(path.positions(SIDE_A))
    rep.b_count = path.L - rep.a_count

    rep.windows_ok = all(
        sorted(ab) == [3, 4] for ab in window_side_counts(path, 7)
    )
    rep.spans_ok = spanning_power_check(path, SIDE_A, 2) and spanning_power_check(
        path, SIDE_B, 2
    )
    rep.far12_edges = sum(
        far_edges(path, side, t) for side in (SIDE_A, SIDE_B) for t in (1, 2)
    )
    rep.far12_expected = sum(
        max(0, len(path.positions(side)) - t) for side in (SIDE_A, SIDE_B) for t in (1, 2)
    )
    rep.identity_ok = rep.far12_edges == rep.far12_expected
    rep.identity_2l6 = rep.far12_edges == 2 * path.L - 6
    if min(rep.a_count, rep.b_count) >= 2 and not rep.identity_2l6:
        rep.identity_ok = False
        rep.notes.append("1-,2-far total differs from 2L-6 despite nondegenerate sides")
    rep.far3_edges = far_edges(path, SIDE_A, 3) + far_edges(path, SIDE_B, 3)
    rep.far3_bound_ok = 4 * rep.far3_edges >= path.L - 6
    return rep


@dataclass
class M9Report:
    """Structural counts for one valid labeling of a 9-path with no same-side K_7."""

    L: int
    precondition_ok: bool
    a_count: int = 0
    b_count: int = 0
    far123_edges: int = 0
    far123_expected: int = 0        # per-side sum of max(0, |Z| - t), t <= 3
    w_a: int = 0                    # 4-far edges on side A
    w_b: int = 0
    z_a: int = 0                    # 5-far edges on side A
    z_b: int = 0
    spans_ok: bool = False          # both sides carry spanning 3-paths
    identity_ok: bool = False       # far123 == expected (== 3L-12 when sides >= 3)
    identity_3l12: bool = False
    w_bound_ok: bool = False        # w >= L/3 - 3
    wz_relation_ok: bool = False    # L - 8 - w <= 4z
    wz_total_ok: bool = False       # w + z >= L/2 - 5
    notes: list[str] = field(default_factory=list)

    @property
    def w(self) -> int:
        return self.w_a + self.w_b

    @property
    def z(self) -> int:
        return self.z_a + self.z_b

    @property
    def ok(self) -> bool:
        return (
            self.precondition_ok
            and self.spans_ok
            and self.identity_ok
            and self.w_bound_ok
            and self.wz_relation_ok
            and self.wz_total_ok
        )


def m9_structure_check(path: PartitionedPath) -> M9Report:
    """The m = 9 structure facts for labelings without a same-side K_7.

    Asserted: both sides span 3-paths, the t <= 3 far edges number exactly
    sum max(0, |Z|-t) (3L-12 once both sides have >= 3 vertices; always the
    case for L >= 10), and the 4-/5-far counts w, z satisfy w >= L/3 - 3,
    L - 8 - w <= 4z and w + z >= L/2 - 5.
    """
    if path.m != 9:
        raise ValueError(f"this check applies to 9-paths, got m={path.m}")
    rep = M9Report(L=path.L, precondition_ok=path.is_valid() and clique_free(path, 7))
    if not rep.precondition_ok:
        rep.notes.append("precondition violated: invalid labeling or same-side K_7 present")
        return rep

    rep.a_count = len(path.positions(SIDE_A))
    rep.b_count = path.L - rep.a_count

    rep.spans_ok = spanning_power_check(path, SIDE_A, 3) and spanning_power_check(
        path, SIDE_B, 3
    )
    rep.far123_edges = sum(
        far_edges(path, side, t) for side in (SIDE_A, SIDE_B) for t in (1, 2, 3)
    )
    rep.far123_expected = sum(
        max(0, len(path.positions(side)) - t)
        for side in (SIDE_A, SIDE_B)
        for t in (1, 2, 3)
    )
    rep.identity_ok = rep.far123_edges == rep.far123_expected
    rep.identity_3l12 = rep.far123_edges == 3 * path.L - 12
    if min(rep.a_count, rep.b_count) >= 3 and not rep.identity_3l12:
        rep.identity_ok = False
        rep.notes.append("t<=3-far total differs from 3L-12 despite nondegenerate sides")

    rep.w_a = far_edges(path, SIDE_A, 4)
    rep.w_b = far_edges(path, SIDE_B, 4)
    rep.z_a = far_edges(path, SIDE_A, 5)
    rep.z_b = far_edges(path, SIDE_B, 5)

    L = path.L
    w, z = rep.w, rep.z
    rep.w_bound_ok = 3 * w >= L - 9
    rep.wz_relation_ok = L - 8 - w <= 4 * z
    rep.wz_total_ok = 2 * (w + z) >= L - 10
    return rep
