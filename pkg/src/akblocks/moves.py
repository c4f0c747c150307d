"""Elementary bead moves, operation sets, moving vectors, and cores.

A move of the first kind sends a bead at (x, y) to (x+1, y); a move of
the second kind (finite e only) sends a bead at (r, y) to (1, y-e).
Moves never leave a subabacus (the columns of one residue class mod e),
and within one subabacus the positions are totally ordered by the key

    t(x, y) = k*r + (r - x)   where  y = k*e + c,

with a single move dropping t by exactly one.  Beads are indexed inside
their subabacus by 1 plus the number of beads after them (larger t);
moves preserve the index, so the multiset of moves between two abaci is
independent of the order they are performed in.  Everything below works
on this linearization.
"""

from __future__ import annotations

from dataclasses import dataclass

from .abacus import AbacusPair, pair_from_beads, row_from_beads
from .partitions import (
    Multicharge,
    Multipartition,
    check_quantum_char,
    in_Abar,
    is_finite,
)


@dataclass(frozen=True, order=True)
class ElementaryOp:
    """One bead move, recorded by its source position and bead index."""

    row: int
    col: int
    index: int


def op_kind(op: ElementaryOp, r: int) -> str:
    return "second" if op.row == r else "first"


def _sub_keys(e, lo: int, hi: int):
    if is_finite(e):
        return range(e)
    return range(lo, hi)


def _t_of(row: int, col: int, e, r: int) -> int:
    if is_finite(e):
        c = col % e
        return ((col - c) // e) * r + (r - row)
    return r - row


def _pos_of(t: int, c: int, e, r: int):
    k, u = divmod(t, r)
    row = r - u
    if is_finite(e):
        return row, k * e + c
    if k != 0:
        raise ValueError("out-of-range level for infinite e")
    return row, c


def _sub_levels(a: AbacusPair, lo: int, hi: int) -> dict:
    """Per-subabacus descending bead levels above a common floor.

    Returns {c: (t_base, levels)} where every level < t_base is beaded,
    the descending list ``levels`` holds the bead t-values >= t_base in
    the column window [lo, hi), and nothing above the window is beaded.
    ``lo`` must be at or below the pair's lower bound.
    """
    e, r = a.e, a.r
    out = {}
    for c in _sub_keys(e, lo, hi):
        if is_finite(e):
            t_base = (((lo - 1 - c) // e) + 1) * r
        else:
            t_base = 0
        out[c] = (t_base, [])
    for row in range(1, r + 1):
        floor = a.row_floor(row)
        for col in list(range(lo, floor)) + [b for b in a.row_betas(row) if b >= max(lo, floor)]:
            if not lo <= col < hi:
                continue
            c = col % e if is_finite(e) else col
            out[c][1].append(_t_of(row, col, e, r))
    for c in out:
        out[c][1].sort(reverse=True)
    return out


def _common_window(*pairs: AbacusPair):
    lo = min(p.bounds()[0] for p in pairs)
    hi = max(p.bounds()[1] for p in pairs)
    return lo, hi


def _ops_between_levels(c, t_base: int, src: list, dst: list, e, r: int):
    """Moves taking the source levels of one subabacus onto the target ones."""
    if len(src) != len(dst):
        raise ValueError(
            f"target unreachable: subabacus {c} bead counts differ ({len(src)} vs {len(dst)})"
        )
    ops = []
    for idx, (t_from, t_to) in enumerate(zip(src, dst), start=1):
        if t_to > t_from:
            raise ValueError(
                f"target unreachable: bead {idx} of subabacus {c} would have to move backwards"
            )
        for t in range(t_to + 1, t_from + 1):
            row, col = _pos_of(t, c, e, r)
            ops.append((c, idx, -t, ElementaryOp(row, col, idx)))
    return ops


def _finish(a: AbacusPair, tagged_ops: list):
    tagged_ops.sort(key=lambda x: x[:3])
    ops = tuple(op for *_, op in tagged_ops)
    mv = [0] * a.r
    for op in ops:
        mv[op.row - 1] += 1
    return ops, tuple(mv)


def operation_set_between(a: AbacusPair, b: AbacusPair):
    """(operation set, moving vector) from one abacus to a reachable one.

    Raises if ``b`` is not reachable from ``a`` by elementary moves.
    Only multiset equality of the returned operation set is contractual;
    the listing is sorted by (subabacus, bead index, move order).
    """
    if a.e != b.e or a.r != b.r:
        raise ValueError("abaci must share quantum characteristic and rank")
    lo, hi = _common_window(a, b)
    src_levels = _sub_levels(a, lo, hi)
    dst_levels = _sub_levels(b, lo, hi)
    tagged = []
    for c in src_levels:
        t_base, src = src_levels[c]
        _, dst = dst_levels[c]
        tagged.extend(_ops_between_levels(c, t_base, src, dst, a.e, a.r))
    return _finish(a, tagged)


def moving_vector_between(a: AbacusPair, b: AbacusPair) -> tuple:
    """Per-row tally of the operation set from a to b."""
    _, mv = operation_set_between(a, b)
    return mv


def core(a: AbacusPair):
    """(core pair, operation set, moving vector).

    The core is the unique complete abacus reachable by elementary
    moves: per subabacus, the beads fill the maximal down-set of the
    t-order with the same bead count.
    """
    e, r = a.e, a.r
    lo, hi = a.bounds()
    levels = _sub_levels(a, lo, hi)
    tagged = []
    rows = {i: set() for i in range(1, r + 1)}
    for c, (t_base, src) in levels.items():
        t_top = t_base + len(src)  # beads of the core: all t < t_top
        dst = list(range(t_top - 1, t_base - 1, -1))
        tagged.extend(_ops_between_levels(c, t_base, src, dst, e, r))
        for t in range(t_base, t_top):
            row, col = _pos_of(t, c, e, r)
            rows[row].add(col)
    core_pair = pair_from_beads(
        [(lo, sorted(cols)) for _, cols in sorted(rows.items())], e
    )
    ops, mv = _finish(a, tagged)
    return core_pair, ops, mv


def apply_op(a: AbacusPair, op: ElementaryOp) -> AbacusPair:
    """Perform one elementary move; the source must carry a bead and the
    target must be empty."""
    r = a.r
    if not 1 <= op.row <= r:
        raise ValueError(f"row {op.row} out of range 1..{r}")
    if op.row < r:
        target = (op.row + 1, op.col)
    else:
        if not is_finite(a.e):
            raise ValueError("second-kind moves need finite e")
        target = (1, op.col - a.e)
    if not a.has_bead(op.row, op.col):
        raise ValueError(f"no bead at source position ({op.row}, {op.col})")
    if a.has_bead(*target):
        raise ValueError(f"target position {target} is blocked by a bead")
    lo, _ = a.bounds()
    lo = min(lo, op.col - (a.e if is_finite(a.e) else 0) - 1, target[1] - 1)
    rows = []
    for i in range(1, r + 1):
        floor = a.row_floor(i)
        extras = set(a.row_betas(i)) | set(range(lo, floor))
        if i == op.row:
            extras.discard(op.col)
        if i == target[0]:
            extras.add(target[1])
        rows.append((lo, extras))
    return pair_from_beads(rows, a.e)


def remove_rim_hook(a: AbacusPair, row: int, col: int) -> AbacusPair:
    """Drop the bead at (row, col+e) to the empty (row, col).

    This deletes one rim e-hook from the component in that row; the
    charge is unchanged and the full cycle of moves has moving vector
    (1, ..., 1).
    """
    if not is_finite(a.e):
        raise ValueError("rim hooks need finite e")
    if not a.has_bead(row, col + a.e):
        raise ValueError(f"no bead at ({row}, {col + a.e})")
    if a.has_bead(row, col):
        raise ValueError(f"position ({row}, {col}) is not empty")
    lo, _ = a.bounds()
    lo = min(lo, col - 1)
    rows = []
    for i in range(1, a.r + 1):
        floor = a.row_floor(i)
        extras = set(a.row_betas(i)) | set(range(lo, floor))
        if i == row:
            extras.discard(col + a.e)
            extras.add(col)
        rows.append((lo, extras))
    return pair_from_beads(rows, a.e)


def rotate_rows(a: AbacusPair, i: int) -> AbacusPair:
    """Delete the bottom i rows and restack them on top with charges shifted by e."""
    if not is_finite(a.e):
        raise ValueError("row rotation needs finite e")
    if not 0 <= i < a.r:
        raise ValueError(f"rotation amount {i} out of range 0..{a.r - 1}")
    mp = a.mp[i:] + a.mp[:i]
    charge = a.charge[i:] + tuple(s + a.e for s in a.charge[:i])
    return AbacusPair(mp, charge, a.e)


def _check_vector_preconditions(s, s_star, m, e):
    r = len(s)
    if len(s_star) != r or len(m) != r:
        raise ValueError("charge and vector ranks must agree")
    if any(x < 0 for x in m):
        raise ValueError("moving vectors have non-negative entries")
    if not in_Abar(s, e) or not in_Abar(s_star, e):
        raise ValueError("both multicharges must have weakly increasing entries with spread at most e")
    for i in range(r):
        if s_star[i] != s[i] - m[i] + m[i - 1]:
            raise ValueError(
                f"charge condition fails at slot {i + 1}: "
                f"{s_star[i]} != {s[i]} - {m[i]} + {m[i - 1]}"
            )


def _rows_of(a: AbacusPair, lo: int):
    rows = []
    for i in range(1, a.r + 1):
        floor = a.row_floor(i)
        rows.append(set(a.row_betas(i)) | set(range(lo, floor)))
    return rows


def _construct_last_zero(s: tuple, s_star: tuple, m: tuple, e) -> Multipartition:
    """Construction for vectors whose last entry vanishes, by recursion on rank."""
    r = len(s)
    if r == 1:
        return ((),)
    if r == 2:
        # peel the top m_1 beads of row 2 of the empty-core abacus into row 1
        moved = [s_star[1] - x for x in range(1, m[0] + 1)]
        p1, u1 = row_from_beads(s_star[0], moved)
        assert u1 == s[0]
        return (p1, ())
    j = next((jj for jj in range(r) if s[0] <= s_star[jj]), None)
    if j is None:
        raise ValueError("no admissible slot found; charge preconditions violated")
    if j == 0:
        tail = _construct_last_zero(s[1:], s_star[1:], m[1:], e)
        return ((),) + tail
    # peel beads of rows 2..j+1 of the empty-core abacus into row 1
    m_prime = [0] * r
    for i in range(j):
        m_prime[i] = m[0] - (s_star[i] - s_star[0])
    moved = []
    for i in range(1, j):  # rows 2..j (0-based slot i)
        for x in range(1, s_star[i] - s_star[i - 1] + 1):
            moved.append(s_star[i] - x)
    for x in range(1, m[0] - s_star[j - 1] + s_star[0] + 1):
        moved.append(s_star[j] - x)
    p1, u1 = row_from_beads(s_star[0], moved)
    assert u1 == s[0]
    u = [0] * r
    for i in range(r):
        u[i] = s_star[i] + m_prime[i] - m_prime[i - 1]
    m_rest = tuple(m[i] - m_prime[i] for i in range(1, r))
    tail = _construct_last_zero(s[1:], tuple(u[1:]), m_rest, e)
    return (p1,) + tail


def construct_from_vector(s: Multicharge, s_star: Multicharge, m, e) -> Multipartition:
    """A multipartition whose moving vector to the empty-core abacus is ``m``.

    Requires s, s_star weakly increasing with spread at most e and the
    cyclic charge condition s*_i = s_i - m_i + m_{i-1}.  The output
    satisfies moving_vector_between(L_s(result), L_{s*}(empty)) == m.
    """
    check_quantum_char(e)
    s = tuple(int(x) for x in s)
    s_star = tuple(int(x) for x in s_star)
    m = tuple(int(x) for x in m)
    _check_vector_preconditions(s, s_star, m, e)
    r = len(s)
    if r == 1:
        if m[0] != 0 and not is_finite(e):
            raise ValueError("a single row cannot move with infinite e")
        if m[0] == 0:
            return ((),)
        # lift the top bead of the packed row by m_1 * e
        p, u = row_from_beads(s_star[0] - 1, [s_star[0] - 1 + m[0] * e])
        assert u == s[0]
        return (p,)
    if not is_finite(e):
        if m[-1] != 0:
            raise ValueError("with infinite e the last vector entry must vanish")
        return _construct_last_zero(s, s_star, m, e)
    m_min = min(m)
    i = m.index(m_min) + 1  # 1-based slot of the minimal entry
    if i == r and m_min == 0:
        return _construct_last_zero(s, s_star, m, e)
    s_rot = tuple(x - e for x in s[i:]) + s[:i]
    s_star_rot = tuple(x - e for x in s_star[i:]) + s_star[:i]
    m_rot = tuple(x - m_min for x in m[i:] + m[:i - 1]) + (0,)
    mu = _construct_last_zero(s_rot, s_star_rot, m_rot, e)
    pair = AbacusPair(mu, s_rot, e)
    lo = pair.bounds()[0] - 1
    rows = _rows_of(pair, lo)
    top = max(rows[0])
    rows[0].discard(top)
    rows[0].add(top + m_min * e)
    lifted = pair_from_beads([(lo, sorted(row)) for row in rows], e)
    lam_bar = lifted.mp
    return lam_bar[r - i:] + lam_bar[:r - i]
