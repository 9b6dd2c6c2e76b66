"""Plain-text codebook files.

The first line is a header of ``key=value`` tokens, e.g.::

    n=6 t=1 p=7 r=2 label=3,4 construction=syndrome dmin=4 metric=hamming

followed by one codeword per line. ``metric=hamming`` files hold base-code
words of length n+1 and ``dmin`` is their Hamming distance; ``metric=ulam``
files hold deletion-code words of length n and ``dmin`` is t+1.
A greedy base code is written with ``label=greedy``.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from ulamcodes.basecode import Codebook, FieldParams
from ulamcodes.deletion import DeletionCode, code_from_words, construct_code
from ulamcodes.perm import Permutation, format_perm, parse_perm

_REQUIRED = ("n", "t", "p", "r", "label", "construction", "dmin", "metric")


class CodeFileError(ValueError):
    pass


@dataclass
class CodeFile:
    header: dict[str, str]
    words: list[Permutation]

    @property
    def n(self) -> int:
        return int(self.header["n"])

    @property
    def t(self) -> int:
        return int(self.header["t"])

    @property
    def metric(self) -> str:
        return self.header["metric"]

    @property
    def label(self) -> tuple[int, ...] | None:
        raw = self.header["label"]
        if raw == "greedy":
            return None
        return tuple(int(c) for c in raw.split(",")) if raw else ()


def _label_text(label) -> str:
    return "greedy" if label is None else ",".join(str(c) for c in label)


def format_header(fields: dict) -> str:
    return " ".join(f"{k}={v}" for k, v in fields.items())


def parse_header(line: str) -> dict[str, str]:
    fields = {}
    for tok in line.split():
        key, sep, value = tok.partition("=")
        if not sep:
            raise CodeFileError(f"malformed header token {tok!r}")
        fields[key] = value
    missing = [k for k in _REQUIRED if k not in fields]
    if missing:
        raise CodeFileError(f"header lacks {', '.join(missing)}")
    return fields


def dumps_code(code: DeletionCode) -> str:
    params = code.base.params
    header = {
        "n": code.n,
        "t": code.t,
        "p": params.p,
        "r": params.r,
        "label": _label_text(code.base.label),
        "construction": code.base.construction,
        "dmin": code.t + 1,
        "metric": "ulam",
    }
    return "\n".join([format_header(header), *(format_perm(w) for w in code.words)]) + "\n"


def dumps_base(book: Codebook, n: int, t: int) -> str:
    params = book.params
    header = {
        "n": n,
        "t": t,
        "p": params.p,
        "r": params.r,
        "label": _label_text(book.label),
        "construction": book.construction,
        "dmin": book.declared_min_distance,
        "metric": "hamming",
    }
    return "\n".join([format_header(header), *(format_perm(w) for w in book.words)]) + "\n"


def loads(text: str) -> CodeFile:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise CodeFileError("empty code file")
    header = parse_header(lines[0])
    words = [parse_perm(ln) for ln in lines[1:]]
    cf = CodeFile(header, words)
    expected = cf.n if cf.metric == "ulam" else cf.n + 1
    for w in words:
        if len(w) != expected:
            raise CodeFileError(f"codeword {tuple(w)} should have length {expected}")
    return cf


def read(path: str | Path) -> CodeFile:
    return loads(Path(path).read_text(encoding="utf-8"))


def to_code(cf: CodeFile) -> DeletionCode:
    """Turn a code file of either metric into a decodable deletion code."""
    construction = cf.header["construction"]
    p = int(cf.header["p"])
    if cf.metric == "ulam":
        return code_from_words(cf.n, cf.t, cf.words, label=cf.label, construction=construction, p=p)
    if cf.metric == "hamming":
        params = FieldParams(p, cf.n + 1, int(cf.header["r"]))
        book = Codebook(
            params=params,
            label=cf.label,
            words=tuple(cf.words),
            declared_min_distance=int(cf.header["dmin"]),
            construction=construction,
            t=cf.t,
        )
        return construct_code(cf.n, cf.t, book)
    raise CodeFileError(f"unknown metric {cf.metric!r}")
