"""
Plain-text formats for instances, solutions and bipartite edge lists.

Instance:
    m p
    <m lines of p tokens 0/1>
    [@row_weights w_1 … w_m]
    [@col_weights u_1 … u_p]
    [@max_cells c]

Solution:
    cells K
    machines
    <m cell indices>
    parts
    <p cell indices>

Edge list:
    left right edges
    <one "u v" line per edge>

Lines starting with '#' and blank lines are ignored everywhere. Writers emit the
canonical text: no comments, single spaces, a trailing newline, directives only when
they differ from the defaults. Parse errors carry the 1-based line and column.
"""

from collections.abc import Iterator
from pathlib import Path

from src.constants import MAX_MATRIX_ENTRIES, MAX_TOTAL_WEIGHT
from src.entity.cfp_entity import BoolMatrix, CfpInstance, CfpSolution
from src.entity.graph_entity import BgepInstance
from src.utils.exception import InstanceParseError, SizeContractError

_Token = tuple[str, int]  # text, 1-based column


class _Lines:
    """Significant lines of a text, each split into tokens with their columns."""

    def __init__(self, text: str):
        self._items: list[tuple[int, list[_Token]]] = []
        for number, line in enumerate(text.splitlines(), start=1):
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            self._items.append((number, _tokens(line)))
        self._position = 0
        self.last_line = max(1, len(text.splitlines()))

    def __iter__(self) -> Iterator[tuple[int, list[_Token]]]:
        while self._position < len(self._items):
            yield self.next("")

    def has_more(self) -> bool:
        return self._position < len(self._items)

    def next(self, expected: str) -> tuple[int, list[_Token]]:
        if not self.has_more():
            raise InstanceParseError(f"unexpected end of input, expected {expected}", self.last_line)
        item = self._items[self._position]
        self._position += 1
        return item


def _tokens(line: str) -> list[_Token]:
    tokens: list[_Token] = []
    column = 0
    for text in line.split():
        column = line.index(text, column)
        tokens.append((text, column + 1))
        column += len(text)
    return tokens


def _integer(token: _Token, line: int, minimum: int = 0, maximum: int | None = None) -> int:
    text, column = token
    if not (text.isascii() and text.isdigit()):
        raise InstanceParseError(f"expected a non-negative integer, got {text!r}", line, column)
    value = int(text)
    if value < minimum:
        raise InstanceParseError(f"expected an integer >= {minimum}, got {value}", line, column)
    if maximum is not None and value > maximum:
        raise InstanceParseError(f"expected an integer <= {maximum}, got {value}", line, column)
    return value


def _weight(token: _Token, line: int) -> int:
    return _integer(token, line, minimum=1, maximum=MAX_TOTAL_WEIGHT)


def _expect_count(tokens: list[_Token], count: int, line: int, what: str) -> None:
    if len(tokens) != count:
        column = tokens[count][1] if len(tokens) > count else (tokens[-1][1] if tokens else 1)
        raise InstanceParseError(f"{what} needs {count} tokens, found {len(tokens)}", line, column)


def _keyword(lines: _Lines, word: str) -> tuple[int, list[_Token]]:
    line, tokens = lines.next(f"'{word}'")
    if tokens[0][0] != word:
        raise InstanceParseError(f"expected '{word}'", line, tokens[0][1])
    return line, tokens[1:]


def read_text(path: Path) -> str:
    """
    Reads a UTF-8 input file.

    Raises:
        InstanceParseError: At the line and column of the first byte that is not UTF-8.
    """
    data = Path(path).read_bytes()
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as e:
        line = data.count(b"\n", 0, e.start) + 1
        column = e.start - (data.rfind(b"\n", 0, e.start) + 1) + 1
        raise InstanceParseError(f"{Path(path).name} is not UTF-8 text", line, column)


# --- Instances ---


def parse_instance(text: str) -> CfpInstance:
    """
    Raises:
        InstanceParseError: On a malformed header, a bad token, a row of the wrong length,
            missing rows, an unknown directive or a weight above the total-weight bound.
        SizeContractError: If the header announces more than the supported entry count,
            or the weights together exceed the total-weight bound.
    """
    lines = _Lines(text)
    line, header = lines.next("header 'm p'")
    _expect_count(header, 2, line, "header")
    m, p = (_integer(token, line, minimum=1) for token in header)
    if m * p > MAX_MATRIX_ENTRIES:
        raise SizeContractError(
            f"{m}x{p} matrix exceeds the {MAX_MATRIX_ENTRIES}-entry size contract"
        )

    rows = []
    for i in range(m):
        line, tokens = lines.next(f"matrix row {i + 1} of {m}")
        if tokens[0][0].startswith("@"):
            raise InstanceParseError(f"matrix has {i} rows, header says {m}", line)
        _expect_count(tokens, p, line, "matrix row")
        for text_, column in tokens:
            if text_ not in ("0", "1"):
                raise InstanceParseError(f"entry must be 0 or 1, got {text_!r}", line, column)
        rows.append(tuple(int(t) for t, _ in tokens))

    directives: dict[str, tuple[int, ...]] = {}
    for line, tokens in lines:
        name, column = tokens[0]
        if name in directives:
            raise InstanceParseError(f"duplicate directive {name}", line, column)
        if name == "@row_weights":
            _expect_count(tokens[1:], m, line, name)
            directives[name] = tuple(_weight(t, line) for t in tokens[1:])
        elif name == "@col_weights":
            _expect_count(tokens[1:], p, line, name)
            directives[name] = tuple(_weight(t, line) for t in tokens[1:])
        elif name == "@max_cells":
            _expect_count(tokens[1:], 1, line, name)
            budget = _integer(tokens[1], line, minimum=1, maximum=MAX_MATRIX_ENTRIES)
            directives[name] = (budget,)
        elif name.startswith("@"):
            raise InstanceParseError(f"unknown directive {name}", line, column)
        else:
            raise InstanceParseError(f"matrix has more than the {m} rows in the header", line, column)

    return CfpInstance(
        BoolMatrix(tuple(rows)),
        row_weights=directives.get("@row_weights", ()),
        col_weights=directives.get("@col_weights", ()),
        max_cells=directives.get("@max_cells", (0,))[0],
    )


def write_instance(instance: CfpInstance) -> str:
    lines = [f"{instance.m} {instance.p}"]
    lines += [" ".join(str(a) for a in row) for row in instance.matrix.rows]
    if any(w != 1 for w in instance.row_weights):
        lines.append("@row_weights " + " ".join(map(str, instance.row_weights)))
    if any(u != 1 for u in instance.col_weights):
        lines.append("@col_weights " + " ".join(map(str, instance.col_weights)))
    if instance.max_cells != min(instance.m, instance.p):
        lines.append(f"@max_cells {instance.max_cells}")
    return "\n".join(lines) + "\n"


def read_instance(path: Path) -> CfpInstance:
    return parse_instance(read_text(path))


# --- Solutions ---


def parse_solution(text: str, instance: CfpInstance | None = None) -> CfpSolution:
    """
    Parses a solution; with `instance`, also checks its shape and cell bounds.

    Raises:
        InstanceParseError: On a malformed section, a cell count that disagrees with the
            distinct indices, or (with `instance`) a wrong length or out-of-range index.
    """
    lines = _Lines(text)
    cells_line, declared = _keyword(lines, "cells")
    _expect_count(declared, 1, cells_line, "'cells'")
    cells = _integer(declared[0], cells_line)

    sections: list[tuple[int, ...]] = []
    shape = (None, None) if instance is None else (instance.m, instance.p)
    for word, size in zip(("machines", "parts"), shape, strict=True):
        line, rest = _keyword(lines, word)
        _expect_count(rest, 0, line, f"'{word}'")
        line, tokens = lines.next(f"{word} cell indices")
        if size is not None:
            _expect_count(tokens, size, line, f"{word} line")
        indices = tuple(_integer(t, line) for t in tokens)
        if instance is not None:
            for index, token in zip(indices, tokens, strict=True):
                if index >= instance.max_cells:
                    raise InstanceParseError(
                        f"cell {index} outside [0, {instance.max_cells})", line, token[1]
                    )
        sections.append(indices)
    if lines.has_more():
        line, tokens = lines.next("")
        raise InstanceParseError("unexpected content after the parts line", line, tokens[0][1])

    solution = CfpSolution(*sections)
    if solution.num_cells != cells:
        raise InstanceParseError(
            f"'cells {cells}' disagrees with {solution.num_cells} distinct indices",
            cells_line,
            declared[0][1],
        )
    return solution


def write_solution(solution: CfpSolution) -> str:
    return (
        f"cells {solution.num_cells}\n"
        f"machines\n{' '.join(map(str, solution.machine_cell))}\n"
        f"parts\n{' '.join(map(str, solution.part_cell))}\n"
    )


def read_solution(path: Path, instance: CfpInstance | None = None) -> CfpSolution:
    return parse_solution(read_text(path), instance)


# --- Edge lists ---


def parse_edge_list(text: str) -> BgepInstance:
    """
    Raises:
        InstanceParseError: On a malformed header, an out-of-range or repeated edge, or an
            edge count that disagrees with the header.
    """
    lines = _Lines(text)
    header_line, header = lines.next("header 'left right edges'")
    _expect_count(header, 3, header_line, "header")
    left = _integer(header[0], header_line, minimum=1)
    right = _integer(header[1], header_line, minimum=1)
    count = _integer(header[2], header_line)
    if left * right > MAX_MATRIX_ENTRIES:
        raise SizeContractError(
            f"{left}x{right} graph exceeds the {MAX_MATRIX_ENTRIES}-entry size contract"
        )

    edges: set[tuple[int, int]] = set()
    for line, tokens in lines:
        _expect_count(tokens, 2, line, "edge")
        u, v = _integer(tokens[0], line), _integer(tokens[1], line)
        if u >= left:
            raise InstanceParseError(f"left vertex {u} outside [0, {left})", line, tokens[0][1])
        if v >= right:
            raise InstanceParseError(f"right vertex {v} outside [0, {right})", line, tokens[1][1])
        if (u, v) in edges:
            raise InstanceParseError(f"edge {u} {v} listed twice", line, tokens[0][1])
        edges.add((u, v))
    if len(edges) != count:
        raise InstanceParseError(f"header announces {count} edges, found {len(edges)}", header_line, header[2][1])
    return BgepInstance(left, right, frozenset(edges))


def write_edge_list(graph: BgepInstance) -> str:
    lines = [f"{graph.left} {graph.right} {len(graph.edges)}"]
    lines += [f"{u} {v}" for u, v in sorted(graph.edges)]
    return "\n".join(lines) + "\n"
