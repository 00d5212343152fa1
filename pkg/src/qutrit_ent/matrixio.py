"""Plain-text matrix files and sweep CSV output.

Matrix file: first significant line is the dimension n, followed by n rows of
n whitespace-separated entries. An entry is a decimal ``re`` or ``re:im``.
``#`` starts a comment; blank lines are ignored.
"""

import math

import numpy as np

from .errors import BadEntryCount, BadHeader, BadNumber

CSV_COLUMNS = ("b", "p", "iq", "negativity_sum", "negativity_excess", "concurrence", "skipped")


def _significant_lines(text):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if line.strip():
            yield lineno, line


def _parse_entry(token, lineno, column):
    parts = token.split(":")
    if len(parts) > 2:
        raise BadNumber(f"bad entry {token!r}", lineno, column)
    try:
        values = [float(x) for x in parts]
    except ValueError:
        raise BadNumber(f"bad number {token!r}", lineno, column) from None
    if not all(math.isfinite(v) for v in values):
        raise BadNumber(f"non-finite entry {token!r}", lineno, column)
    return complex(values[0], values[1] if len(values) == 2 else 0.0)


def parse_matrix(text):
    lines = list(_significant_lines(text))
    if not lines:
        raise BadHeader("empty matrix file", 1)
    head_no, head = lines[0]
    try:
        dim = int(head.strip())
    except ValueError:
        raise BadHeader(f"expected an integer dimension, got {head.strip()!r}", head_no) from None
    if not 1 <= dim <= 8:
        raise BadHeader(f"dimension {dim} outside 1..8", head_no)
    rows = lines[1:]
    if len(rows) != dim:
        last = rows[-1][0] if rows else head_no
        if len(rows) > dim:
            last = rows[dim][0]
        raise BadEntryCount(f"expected {dim} rows, found {len(rows)}", last)
    out = np.zeros((dim, dim), dtype=complex)
    for i, (lineno, line) in enumerate(rows):
        tokens = []
        pos = 0
        for tok in line.split():
            col = line.index(tok, pos)
            pos = col + len(tok)
            tokens.append((tok, col + 1))
        if len(tokens) != dim:
            raise BadEntryCount(f"expected {dim} entries, found {len(tokens)}", lineno)
        for j, (tok, col) in enumerate(tokens):
            out[i, j] = _parse_entry(tok, lineno, col)
    return out


def read_matrix(path):
    with open(path, encoding="utf-8") as fh:
        return parse_matrix(fh.read())


def _fmt_entry(z):
    z = complex(z)
    re = f"{z.real:.17g}"
    if z.imag == 0.0 and math.copysign(1.0, z.imag) > 0:
        return re
    return f"{re}:{z.imag:.17g}"


def format_matrix(m):
    m = np.asarray(m, dtype=complex)
    lines = [str(m.shape[0])]
    lines += [" ".join(_fmt_entry(z) for z in row) for row in m]
    return "\n".join(lines) + "\n"


def write_matrix(path, m):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(format_matrix(m))


def fmt_real(x):
    """12 significant digits, no negative zero; '' for missing values."""
    if x is None:
        return ""
    x = float(x)
    if x == 0.0:
        x = 0.0
    return f"{x:.12g}"


def format_csv(rows, columns=CSV_COLUMNS):
    """``rows`` are mappings; missing keys become empty cells."""
    out = [",".join(columns)]
    for row in rows:
        cells = []
        for col in columns:
            v = row.get(col)
            if isinstance(v, bool):
                cells.append("1" if v else "0")
            else:
                cells.append(fmt_real(v))
        out.append(",".join(cells))
    return "\n".join(out) + "\n"


def sweep_rows_to_dicts(rows):
    dicts = []
    for r in rows:
        d = {"b": r.b, "p": r.p, "skipped": r.skipped}
        if not r.skipped:
            d.update(
                iq=r.iq,
                negativity_sum=r.negativity_sum,
                negativity_excess=r.negativity_excess,
                concurrence=r.concurrence,
            )
        dicts.append(d)
    return dicts


def parse_csv(text):
    """Inverse of :func:`format_csv` for the numeric columns (None for blanks)."""
    lines = text.splitlines()
    header = lines[0].split(",")
    out = []
    for line in lines[1:]:
        cells = line.split(",")
        out.append({k: (float(v) if v != "" else None) for k, v in zip(header, cells)})
    return out
