"""Permutations as avalanche orders, and chip-firing on the word itself.

A permutation of 1..n splits into maximal alternating runs, ascending first:
"12738645" gives 127 | 3 | 8 | 64 | 5. Prefixing the block {0} makes this
the canonical toppling order of a recurrent configuration on the Ferrers
graph whose rows are {0} plus the descent bottoms of the word. Ascending
blocks hold column vertices, descending blocks hold row vertices.

The module converts both ways between words, tableaux and configurations,
computes the same decoration bounds as the tableau side, and implements
grain stabilization directly on decorated words: a letter with too large a
decoration either settles (slides one block towards the front, handing one
grain to each witness that made its bound) or, from the first block, topples
(pays out its bound and jumps to the last block it still beats). The result
is canonical and matches graph stabilization exactly.
"""

from .errors import DomainError
from .diagrams import FerrersDiagram
from . import sandpile
from . import tableaux

__all__ = [
    "run_blocks",
    "word_from_blocks",
    "shape_of_word",
    "from_tableau",
    "to_tableau",
    "word_from_config",
    "minimal_config",
    "canonical_bounds",
    "stable_bounds",
    "classify_decoration",
    "decorated_from_config",
    "config_from_decorated",
    "stabilize",
]


def _check_word(word):
    word = tuple(int(x) for x in word)
    if not word or sorted(word) != list(range(1, len(word) + 1)):
        raise DomainError("%r is not a permutation of 1..n" % (word,))
    return word


def run_blocks(word):
    """Split into maximal alternating runs, ascending first, prefixed with
    the sink block. Blocks come back as ascending tuples: run_blocks of
    (1,3,5,4,2) is ((0,), (1,3,5), (2,4))."""
    word = _check_word(word)
    blocks = [(0,)]
    i = 0
    ascending = True
    while i < len(word):
        j = i + 1
        while j < len(word) and (word[j] > word[j - 1]) == ascending:
            j += 1
        blocks.append(tuple(sorted(word[i:j])))
        i = j
        ascending = not ascending
    return tuple(blocks)


def word_from_blocks(blocks):
    """Rebuild the word from its blocks (sink block first): odd-position
    blocks are written ascending, even-position blocks descending. The
    result must parse back to the same blocks."""
    blocks = tuple(tuple(sorted(b)) for b in blocks)
    if not blocks or blocks[0] != (0,):
        raise DomainError("blocks must start with the sink block (0,)")
    word = []
    for k in range(1, len(blocks)):
        if not blocks[k]:
            raise DomainError("blocks must be nonempty")
        part = sorted(blocks[k], reverse=(k % 2 == 0))
        word.extend(part)
    word = _check_word(word)
    if run_blocks(word) != blocks:
        raise DomainError("blocks are not the run decomposition of any word")
    return word


def shape_of_word(word):
    """The Ferrers shape whose rows are {0} plus the descent bottoms."""
    blocks = run_blocks(word)
    rows = [0]
    for k in range(2, len(blocks), 2):
        rows.extend(blocks[k])
    return FerrersDiagram.from_row_labels(rows, len(word))


def from_tableau(t):
    """Word of the canonical toppling of the tableau."""
    return word_from_blocks(tableaux.canonical_toppling(t))


def to_tableau(word):
    """Tableau whose entry at (row i, column j) records whether i's block
    precedes j's block. Inverse of from_tableau."""
    d = shape_of_word(word)
    blocks = run_blocks(word)
    pos = {}
    for k, block in enumerate(blocks):
        for v in block:
            pos[v] = k
    rows = []
    for i in d.row_labels:
        row = []
        for x in range(d.parts[d.row_index(i)]):
            j = d.col_labels[x]
            row.append(1 if pos[i] < pos[j] else 0)
        rows.append(row)
    t = tableaux.EWTableau(d, rows)
    tableaux.ensure_valid(t)
    return t


def word_from_config(diagram, heights):
    """Word of the canonical toppling of a recurrent configuration."""
    return word_from_blocks(sandpile.canonical_toppling(diagram, heights))


def _split(blocks):
    """(ascending_blocks, descending_blocks) without the sink block."""
    asc = [blocks[k] for k in range(1, len(blocks), 2)]
    desc = [blocks[k] for k in range(2, len(blocks), 2)]
    return asc, desc


def minimal_config(word):
    """Minimal recurrent configuration with this avalanche order: a letter
    in an ascending block counts the smaller letters of the descending
    blocks from its own index on; a letter in a descending block counts the
    larger letters of the strictly later ascending blocks."""
    word = _check_word(word)
    asc, desc = _split(run_blocks(word))
    out = [0] * len(word)
    for k, block in enumerate(asc):
        for v in block:
            out[v - 1] = sum(1 for b in desc[k:] for j in b if j < v)
    for k, block in enumerate(desc):
        for v in block:
            out[v - 1] = sum(1 for b in asc[k + 1 :] for j in b if j > v)
    return tuple(out)


def canonical_bounds(word):
    """Per-letter count of witnesses in the previous block: smaller letters
    of the previous descending block (the sink for the first block) for an
    ascending letter, larger letters of its own-index ascending block for a
    descending letter. Decorations strictly below these bounds are exactly
    the ones that keep the avalanche order."""
    word = _check_word(word)
    asc, desc = _split(run_blocks(word))
    out = [0] * len(word)
    for k, block in enumerate(asc):
        for v in block:
            out[v - 1] = 1 if k == 0 else sum(1 for j in desc[k - 1] if j < v)
    for k, block in enumerate(desc):
        for v in block:
            out[v - 1] = sum(1 for j in asc[k] if j > v)
    return tuple(out)


def stable_bounds(word):
    """Per-letter count of witnesses up to its own block: smaller letters of
    the earlier descending blocks plus the sink for an ascending letter,
    larger letters of the ascending blocks up to its index for a descending
    letter. These bounds plus the minimal configuration give the degrees."""
    word = _check_word(word)
    asc, desc = _split(run_blocks(word))
    out = [0] * len(word)
    for k, block in enumerate(asc):
        for v in block:
            out[v - 1] = 1 + sum(1 for b in desc[:k] for j in b if j < v)
    for k, block in enumerate(desc):
        for v in block:
            out[v - 1] = sum(1 for b in asc[: k + 1] for j in b if j > v)
    return tuple(out)


def _check_decorations(word, decorations):
    decorations = tuple(int(a) for a in decorations)
    if len(decorations) != len(word):
        raise DomainError(
            "expected %d decorations, got %d" % (len(word), len(decorations))
        )
    if any(a < 0 for a in decorations):
        raise DomainError("decorations must be non-negative")
    return decorations


def classify_decoration(word, decorations):
    """'canonical' below the canonical bounds everywhere, 'stable' below the
    stable bounds only, 'invalid' otherwise."""
    word = _check_word(word)
    decorations = _check_decorations(word, decorations)
    if all(a < b for a, b in zip(decorations, canonical_bounds(word))):
        return "canonical"
    if all(a < b for a, b in zip(decorations, stable_bounds(word))):
        return "stable"
    return "invalid"


def decorated_from_config(diagram, heights):
    """Encode a recurrent configuration as (word, decorations): the word of
    its avalanche plus the surplus over the minimal configuration."""
    blocks = sandpile.canonical_toppling(diagram, heights)
    word = word_from_blocks(blocks)
    base = minimal_config(word)
    deco = tuple(h - b for h, b in zip(heights, base))
    assert all(a >= 0 for a in deco)
    return word, deco


def config_from_decorated(word, decorations):
    """(diagram, heights) for a decorated word; heights is the minimal
    configuration plus the decorations. Canonical decorations give back
    exactly the configurations that decompose to this word; larger ones
    still map to configurations (possibly unstable) and are what the
    stabilizer works on."""
    word = _check_word(word)
    decorations = _check_decorations(word, decorations)
    diagram = shape_of_word(word)
    base = minimal_config(word)
    heights = tuple(b + a for b, a in zip(base, decorations))
    return diagram, heights


class _Blocks:
    """Mutable positional block structure for the stabilizer.

    blocks[0] is the first ascending block, blocks[1] the first descending
    block and so on; each is kept sorted ascending. Blocks may be empty in
    mid-rewrite; the rules below make any letter behind an empty block
    unsettled, so such states rewrite themselves away.
    """

    def __init__(self, blocks):
        self.blocks = [sorted(b) for b in blocks]

    @classmethod
    def from_word(cls, word):
        return cls(run_blocks(word)[1:])

    def word(self):
        out = []
        for idx, block in enumerate(self.blocks):
            out.extend(block if idx % 2 == 0 else reversed(block))
        return tuple(out)

    def index_of(self, x):
        for idx, block in enumerate(self.blocks):
            if x in block:
                return idx
        raise AssertionError("letter %r lost" % (x,))

    def witnesses(self, x):
        """Letters of the previous block that bound x from its own side:
        smaller ones for an ascending letter, larger ones for a descending
        letter. The first block's witness is the sink, reported as 0."""
        idx = self.index_of(x)
        if idx == 0:
            return [0]
        prev = self.blocks[idx - 1]
        if idx % 2 == 0:
            return [j for j in prev if j < x]
        return [j for j in prev if j > x]

    def mu(self, x):
        return len(self.witnesses(x))

    def _insert(self, idx, x):
        while len(self.blocks) <= idx:
            self.blocks.append([])
        block = self.blocks[idx]
        block.append(x)
        block.sort()

    def _trim(self):
        while self.blocks and not self.blocks[-1]:
            self.blocks.pop()

    def settle(self, x, deco):
        """Slide an unsettled letter one block towards the front, paying one
        grain to each witness. Preserves the encoded configuration."""
        idx = self.index_of(x)
        assert idx >= 2, "only letters beyond the first block settle"
        ws = self.witnesses(x)
        assert deco[x - 1] >= len(ws)
        deco[x - 1] -= len(ws)
        for w in ws:
            deco[w - 1] += 1
        self.blocks[idx].remove(x)
        self._insert(idx - 2, x)
        self._trim()

    def topple(self, x, deco):
        """Topple an unstable first-block letter: pay out its bound (to the
        larger first-ascending-block letters for a descending letter, to the
        sink for an ascending one) and jump to the last block it beats."""
        idx = self.index_of(x)
        assert idx <= 1, "only first-block letters topple"
        ws = self.witnesses(x)
        assert deco[x - 1] >= len(ws)
        deco[x - 1] -= len(ws)
        for w in ws:
            if w != 0:
                deco[w - 1] += 1
        self.blocks[idx].remove(x)
        if idx == 1:
            k = max(
                m
                for m in range(len(self.blocks))
                if m % 2 == 0 and any(j > x for j in self.blocks[m])
            )
            self._insert(k + 1, x)
        else:
            candidates = [-1]
            candidates += [
                m
                for m in range(1, len(self.blocks), 2)
                if any(j < x for j in self.blocks[m])
            ]
            self._insert(max(candidates) + 1, x)
        if len(self.blocks) > 1 and not self.blocks[1]:
            rest = self.blocks[2] if len(self.blocks) > 2 else []
            self.blocks = [sorted(self.blocks[0] + rest)] + self.blocks[3:]
        self._trim()


def stabilize(word, decorations, trace=False):
    """Stabilize a decorated word without touching the graph.

    Repeatedly: settle the leftmost letter at or over its bound that sits
    beyond the first block; once none remain, collect the first-block
    letters at or over their bounds (these are exactly the unstable vertices
    of the encoded configuration) and topple each in left-to-right order.
    Stops when neither kind exists; the result is a canonically decorated
    word encoding the graph stabilization of the input configuration.

    Returns (word, decorations), or (word, decorations, trace) with trace a
    list of {action, letter, word, decorations} snapshots taken after each
    settle or topple.
    """
    word = _check_word(word)
    deco = list(_check_decorations(word, decorations))
    b = _Blocks.from_word(word)
    events = []
    cap = 10_000 + 40 * (len(word) + 2) ** 3 * (sum(deco) + len(word) + 2)
    steps = 0

    def record(action, letter):
        events.append(
            {
                "action": action,
                "letter": letter,
                "word": b.word(),
                "decorations": tuple(deco),
            }
        )

    while True:
        steps += 1
        assert steps < cap, "stabilization exceeded its iteration budget"
        moved = False
        for x in b.word():
            if b.index_of(x) >= 2 and deco[x - 1] >= b.mu(x):
                b.settle(x, deco)
                if trace:
                    record("settle", x)
                moved = True
                break
        if moved:
            continue
        unstable = {
            x
            for idx in (0, 1)
            if idx < len(b.blocks)
            for x in b.blocks[idx]
            if deco[x - 1] >= b.mu(x)
        }
        if not unstable:
            break
        while unstable:
            x = next(l for l in b.word() if l in unstable)
            unstable.discard(x)
            b.topple(x, deco)
            if trace:
                record("topple", x)
    out = b.word()
    assert run_blocks(out)[1:] == tuple(tuple(blk) for blk in b.blocks)
    assert classify_decoration(out, deco) == "canonical"
    if trace:
        return out, tuple(deco), events
    return out, tuple(deco)
