"""0/1 tableaux on Ferrers shapes and their sandpile meaning.

An EW-tableau is a 0/1 filling where the top row is all 1s, every other row
has at least one 0, and no rectangle of four cells carries 0s on one diagonal
and 1s on the other. These fillings are in bijection with the minimal
recurrent configurations of the diagram's graph: the configuration reads off
as the number of 1s in each non-top row and the number of 0s in each column.

The cell in row i and column j records which of the two vertices topples
first in the canonical avalanche (1 when the row precedes the column). The
supplementary tableau extends that comparison to every row/column pair,
including pairs without a cell, as a full rectangular 0/1 grid whose
restriction to the shape is the tableau itself.
"""

from .errors import DomainError
from . import sandpile

__all__ = [
    "EWTableau",
    "Supplementary",
    "validate",
    "ensure_valid",
    "minimal_config",
    "from_minimal_config",
    "canonical_toppling",
    "supplementary",
    "supplementary_entry",
    "corner_support",
    "canonical_bounds",
    "stable_bounds",
    "classify_decoration",
    "decorated_from_config",
    "config_from_decorated",
]

ABSENT = None  # sentinel for grid positions outside the shape


class EWTableau:
    """A 0/1 filling of a Ferrers shape.

    `rows[i][x]` is the entry of the i-th row (top to bottom) at column
    position x (left to right). Construction checks only that the filling
    fits the shape; use validate()/ensure_valid() for the EW conditions.
    """

    def __init__(self, diagram, rows):
        rows = tuple(tuple(int(b) for b in row) for row in rows)
        if len(rows) != len(diagram.parts):
            raise DomainError(
                "expected %d rows, got %d" % (len(diagram.parts), len(rows))
            )
        for i, row in enumerate(rows):
            if len(row) != diagram.parts[i]:
                raise DomainError(
                    "row %d must have %d entries, got %d"
                    % (i, diagram.parts[i], len(row))
                )
            if any(b not in (0, 1) for b in row):
                raise DomainError("entries must be 0 or 1")
        self.diagram = diagram
        self.rows = rows

    def entry(self, i, j):
        """Entry at row label i, column label j (the labels, not positions)."""
        d = self.diagram
        ri = d.row_index(i)
        x = d.col_index(j)
        if x >= d.parts[ri]:
            raise DomainError("no cell at row %d, column %d" % (i, j))
        return self.rows[ri][x]

    def grid(self):
        """Dense |rows| x |cols| grid with ABSENT outside the shape."""
        width = self.diagram.parts[0]
        return [
            [row[x] if x < len(row) else ABSENT for x in range(width)]
            for row in self.rows
        ]

    def row_strings(self):
        return tuple("".join(str(b) for b in row) for row in self.rows)

    def __eq__(self, other):
        return (
            isinstance(other, EWTableau)
            and self.diagram == other.diagram
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.diagram, self.rows))

    def __repr__(self):
        return "EWTableau(%r, %r)" % (self.diagram.parts, "/".join(self.row_strings()))


def validate(t):
    """Structured report of EW-condition violations; empty means valid.

    Three rules are checked separately:
      top-row-ones     the top row contains only 1s
      row-has-zero     every non-top row contains a 0
      rectangle        no four-cell rectangle has 0s on one diagonal and 1s
                       on the other
    """
    problems = []
    rows = t.rows
    for x, b in enumerate(rows[0]):
        if b != 1:
            problems.append({"rule": "top-row-ones", "row": 0, "x": x})
    for i in range(1, len(rows)):
        if 0 not in rows[i]:
            problems.append({"rule": "row-has-zero", "row": i})
    for i in range(len(rows)):
        for i2 in range(i + 1, len(rows)):
            width = len(rows[i2])  # the lower row is never longer
            for x in range(width):
                for x2 in range(x + 1, width):
                    a, b = rows[i][x], rows[i][x2]
                    c, d = rows[i2][x], rows[i2][x2]
                    if a == d and b == c and a != b:
                        problems.append(
                            {
                                "rule": "rectangle",
                                "rows": (i, i2),
                                "cols": (x, x2),
                            }
                        )
    return problems


def ensure_valid(t):
    problems = validate(t)
    if problems:
        raise DomainError("not an EW-tableau: %r" % (problems[0],))
    return t


def minimal_config(t):
    """The minimal recurrent configuration encoded by the tableau: row
    vertices get their count of 1s, column vertices their count of 0s."""
    d = t.diagram
    out = [0] * d.n
    for i, label in enumerate(d.row_labels):
        if label == 0:
            continue
        out[label - 1] = sum(t.rows[i])
    for x, label in enumerate(d.col_labels):
        height = d.col_height(x)
        ones = sum(t.rows[i][x] for i in range(height))
        out[label - 1] = height - ones
    return tuple(out)


def from_minimal_config(diagram, heights):
    """Inverse of minimal_config; the input must be a minimal recurrent
    configuration (it is checked to reproduce itself)."""
    if sandpile.minimal_recurrent(diagram, heights) != tuple(heights):
        raise DomainError("configuration is not minimal recurrent")
    blocks = sandpile.canonical_toppling(diagram, heights)
    pos = {}
    for k, block in enumerate(blocks):
        for v in block:
            pos[v] = k
    rows = []
    for i in diagram.row_labels:
        row = []
        for x in range(diagram.parts[diagram.row_index(i)]):
            j = diagram.col_labels[x]
            row.append(1 if pos[i] < pos[j] else 0)
        rows.append(row)
    t = EWTableau(diagram, rows)
    ensure_valid(t)
    return t


def canonical_toppling(t):
    """Canonical avalanche blocks computed from the tableau alone.

    Record the all-1s rows (the top row first), zero them out; record the
    columns that became all 0s, set them to 1; repeat until every label is
    recorded. Already-recorded rows and columns are ignored by the scans.
    Equals the sandpile canonical toppling of minimal_config(t).
    """
    d = t.diagram
    work = [list(row) for row in t.rows]
    rec_rows = set()
    rec_cols = set()
    blocks = []
    total = len(d.row_labels) + len(d.col_labels)
    while len(rec_rows) + len(rec_cols) < total:
        ready_rows = [
            d.row_labels[i]
            for i in range(len(work))
            if d.row_labels[i] not in rec_rows and all(b == 1 for b in work[i])
        ]
        if ready_rows:
            blocks.append(tuple(sorted(ready_rows)))
            for v in ready_rows:
                rec_rows.add(v)
                i = d.row_index(v)
                work[i] = [0] * len(work[i])
        ready_cols = [
            d.col_labels[x]
            for x in range(d.parts[0])
            if d.col_labels[x] not in rec_cols
            and all(work[i][x] == 0 for i in range(d.col_height(x)))
        ]
        if ready_cols:
            blocks.append(tuple(sorted(ready_cols)))
            for v in ready_cols:
                rec_cols.add(v)
                x = d.col_index(v)
                for i in range(d.col_height(x)):
                    work[i][x] = 1
        if not ready_rows and not ready_cols:
            raise DomainError("not an EW-tableau: toppling scan stalls")
    if blocks[0] != (0,):
        raise DomainError("not an EW-tableau: a non-top row starts all 1s")
    return tuple(blocks)


class Supplementary:
    """Full rectangular 0/1 comparison grid over all row/column label pairs.

    entry(i, j) is 1 exactly when row i topples before column j in the
    canonical avalanche. Restricted to cells of the shape it coincides with
    the tableau it was built from.
    """

    def __init__(self, diagram, grid):
        self.diagram = diagram
        self.grid = tuple(tuple(row) for row in grid)

    def entry(self, i, j):
        return self.grid[self.diagram.row_index(i)][self.diagram.col_index(j)]

    def row_strings(self):
        return tuple("".join(str(b) for b in row) for row in self.grid)

    def __eq__(self, other):
        return (
            isinstance(other, Supplementary)
            and self.diagram == other.diagram
            and self.grid == other.grid
        )

    def __repr__(self):
        return "Supplementary(%r, %r)" % (
            self.diagram.parts,
            "/".join(self.row_strings()),
        )


def supplementary(t):
    """Build the supplementary grid from the canonical toppling blocks."""
    d = t.diagram
    blocks = canonical_toppling(t)
    pos = {}
    for k, block in enumerate(blocks):
        for v in block:
            pos[v] = k
    grid = [
        [1 if pos[i] < pos[j] else 0 for j in d.col_labels]
        for i in d.row_labels
    ]
    return Supplementary(d, grid)


def supplementary_entry(t, i, j):
    """Entry of the supplementary grid at row i, column j with i > j,
    computed locally from the tableau without any toppling.

    The entry is 0 exactly when some column k' > i has a 0 in row i and
    every row above column j that has a 0 in column k' also has a 0 in
    column j; otherwise it is 1.
    """
    d = t.diagram
    if not d.is_row(i) or not d.is_col(j):
        raise DomainError("(%r, %r) is not a row/column pair" % (i, j))
    if i < j:
        raise DomainError("cell (%d, %d) lies inside the shape" % (i, j))
    for kp in d.col_labels:
        if kp > i and t.entry(i, kp) == 0:
            if all(
                t.entry(jp, j) == 0
                for jp in d.row_labels
                if jp < j and t.entry(jp, kp) == 0
            ):
                return 0
    return 1


def _supplementary_lookup(t, s):
    """entry accessor over the full grid; s may be None to force the local
    rule for out-of-shape positions."""
    d = t.diagram

    def look(i, j):
        if j > i:
            return t.entry(i, j)
        if s is not None:
            return s.entry(i, j)
        return supplementary_entry(t, i, j)

    return look


def corner_support(t, method="blocks"):
    """Cells of the shape whose entry is witnessed by a complementary entry
    at the opposite corner of some rectangle in the supplementary grid (the
    two remaining corners matching the cell's value). Returns the set of
    (row label, column label) pairs.

    method="blocks" scans the full supplementary grid built from the
    canonical toppling; method="local" uses only tableau entries plus the
    local rule of supplementary_entry, never toppling anything. The two
    agree.
    """
    d = t.diagram
    cells = [(i, j) for i in d.row_labels for j in d.col_labels if j > i]
    out = set()
    if method == "blocks":
        s = supplementary(t)
        look = _supplementary_lookup(t, s)
        for i, j in cells:
            x = t.entry(i, j)
            found = False
            for i2 in d.row_labels:
                if i2 == i:
                    continue
                if look(i2, j) != x:
                    continue
                for j2 in d.col_labels:
                    if j2 == j:
                        continue
                    if look(i2, j2) == 1 - x and look(i, j2) == x:
                        found = True
                        break
                if found:
                    break
            if found:
                out.add((i, j))
        return out
    if method != "local":
        raise ValueError("method must be 'blocks' or 'local'")
    for i, j in cells:
        x = t.entry(i, j)
        found = False
        if x == 0:
            # witness: a 1-cell at (i2, j2) with a 0 at (i, j2), and the
            # fourth corner (i2, j) reading 0 (in the shape or by the rule)
            for i2 in d.row_labels:
                if i2 == i or found:
                    continue
                for j2 in d.col_labels:
                    if j2 == j or j2 <= i2 or j2 <= i:
                        continue
                    if t.entry(i2, j2) != 1 or t.entry(i, j2) != 0:
                        continue
                    corner = (
                        t.entry(i2, j) if j > i2 else supplementary_entry(t, i2, j)
                    )
                    if corner == 0:
                        found = True
                        break
        else:
            # witness: a 0-cell at (i2, j2) with a 1 at (i2, j), and the
            # fourth corner (i, j2) reading 1
            for i2 in d.row_labels:
                if i2 == i or found or j <= i2:
                    continue
                for j2 in d.col_labels:
                    if j2 == j or j2 <= i2:
                        continue
                    if t.entry(i2, j2) != 0 or t.entry(i2, j) != 1:
                        continue
                    corner = (
                        t.entry(i, j2) if j2 > i else supplementary_entry(t, i, j2)
                    )
                    if corner == 1:
                        found = True
                        break
        if found:
            out.add((i, j))
    return out


def canonical_bounds(t):
    """Per-vertex decoration bounds that keep the canonical toppling intact:
    for a row, its count of 0s not in corner_support; for a column, its
    count of 1s not in corner_support. Entry v-1 for vertex v."""
    d = t.diagram
    mask = corner_support(t)
    out = [0] * d.n
    for i in d.row_labels:
        if i == 0:
            continue
        ri = d.row_index(i)
        out[i - 1] = sum(
            1
            for x in range(d.parts[ri])
            if t.rows[ri][x] == 0 and (i, d.col_labels[x]) not in mask
        )
    for x, j in enumerate(d.col_labels):
        out[j - 1] = sum(
            1
            for ri in range(d.col_height(x))
            if t.rows[ri][x] == 1 and (d.row_labels[ri], j) not in mask
        )
    return tuple(out)


def stable_bounds(t):
    """Per-vertex decoration bounds below which the decorated configuration
    stays stable: total 0s in the row, total 1s in the column."""
    d = t.diagram
    out = [0] * d.n
    for i in d.row_labels:
        if i == 0:
            continue
        ri = d.row_index(i)
        out[i - 1] = d.parts[ri] - sum(t.rows[ri])
    for x, j in enumerate(d.col_labels):
        out[j - 1] = sum(t.rows[ri][x] for ri in range(d.col_height(x)))
    return tuple(out)


def classify_decoration(t, decorations):
    """'canonical' when every decoration is below the canonical bound,
    'stable' when below the stable bound only, 'invalid' otherwise."""
    d = t.diagram
    decorations = tuple(int(a) for a in decorations)
    if len(decorations) != d.n:
        raise DomainError(
            "expected %d decorations, got %d" % (d.n, len(decorations))
        )
    if any(a < 0 for a in decorations):
        raise DomainError("decorations must be non-negative")
    if all(a < b for a, b in zip(decorations, canonical_bounds(t))):
        return "canonical"
    if all(a < b for a, b in zip(decorations, stable_bounds(t))):
        return "stable"
    return "invalid"


def decorated_from_config(diagram, heights):
    """Encode a recurrent configuration as (tableau, decorations): the
    tableau of its minimal recurrent part plus the grain surplus."""
    base = sandpile.minimal_recurrent(diagram, heights)
    t = from_minimal_config(diagram, base)
    deco = tuple(h - b for h, b in zip(heights, base))
    return t, deco


def config_from_decorated(t, decorations):
    """Inverse of decorated_from_config; requires a canonical decoration."""
    ensure_valid(t)
    kind = classify_decoration(t, decorations)
    if kind != "canonical":
        raise DomainError("decoration is %s, not canonical" % kind)
    base = minimal_config(t)
    return tuple(b + a for b, a in zip(base, decorations))
