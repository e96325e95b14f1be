"""
Text grammar for command-line inputs and deterministic rendering of results.
"""

import csv
import io
import json
import os
import tempfile
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple

from rich import box
from rich.console import Console
from rich.table import Table

from ..partitions import Bipartition, Partition, PartitionError
from ..central import FormalCut
from ..slz import Block, FamilySpec, SlzError, SparseVector, TensorProduct, TupleIndex
from ..stable import HomFamily, StableError

FORMATS = ("json", "csv", "text")


class FormatError(Exception):
    """Exception raised when a command-line value does not match its grammar."""

    pass


def _int(token: str, context: str) -> int:
    try:
        return int(token.strip())
    except ValueError:
        raise FormatError(f"{token.strip()!r} in {context!r} is not an integer")


def parse_int_list(text: str) -> Tuple[int, ...]:
    """'3,-1,0' -> (3, -1, 0); the empty string is the empty vector."""
    text = (text or "").strip()
    if not text:
        return ()
    return tuple(_int(tok, text) for tok in text.split(","))


def parse_partition(text: str) -> Partition:
    values = parse_int_list(text)
    if any(v < 0 for v in values):
        raise FormatError(f"partition {text!r} has a negative part")
    try:
        return Partition(values)
    except PartitionError as e:
        raise FormatError(f"{text!r}: {str(e)}")


def parse_bipartition(text: str) -> Bipartition:
    """'2,1|1' -> ((2,1)|(1)); a missing bar means an empty negative part."""
    plus, _, minus = (text or "").partition("|")
    return Bipartition(parse_partition(plus), parse_partition(minus))


def _key_values(text: str, separator: str) -> List[Tuple[str, str]]:
    """Split 'k=1,a=2,0,b=' into pairs; tokens without '=' extend the previous value."""
    pairs: List[Tuple[str, str]] = []
    for token in (text or "").split(separator):
        token = token.strip()
        if not token:
            continue
        if "=" in token:
            key, _, value = token.partition("=")
            pairs.append((key.strip(), value.strip()))
        elif pairs:
            key, value = pairs[-1]
            pairs[-1] = (key, f"{value}{separator}{token}" if value else token)
        else:
            raise FormatError(f"{token!r} in {text!r} is not of the form key=value")
    return pairs


_FAMILY_KEYS = ("k", "l", "a", "b", "gamma", "delta")


def parse_family(text: str) -> HomFamily:
    """
    Read 'k=1,l=0,a=0,b=,gamma=,delta=' into a HomFamily.

    k and l default to the lengths of a and b.
    """
    values: Dict[str, str] = {}
    for key, value in _key_values(text, ","):
        if key not in _FAMILY_KEYS:
            raise FormatError(f"unknown family key {key!r} in {text!r}; expected {', '.join(_FAMILY_KEYS)}")
        values[key] = value
    a = parse_int_list(values.get("a", ""))
    b = parse_int_list(values.get("b", ""))
    k = _int(values["k"], text) if values.get("k") else len(a)
    l = _int(values["l"], text) if values.get("l") else len(b)
    if not a and k:
        a = (0,) * k
    if not b and l:
        b = (0,) * l
    try:
        return HomFamily(k, l, a, b, parse_partition(values.get("gamma", "")), parse_partition(values.get("delta", "")))
    except StableError as e:
        raise FormatError(f"{text!r}: {str(e)}")


def parse_triple(text: str) -> FormalCut:
    """'k=1,l=1,gamma=2,1' -> the formal cut with generators a1..ak, b1..bl."""
    values = dict(_key_values(text, ","))
    unknown = set(values) - {"k", "l", "gamma"}
    if unknown:
        raise FormatError(f"unknown triple key(s) {', '.join(sorted(unknown))} in {text!r}; expected k, l, gamma")
    k = _int(values["k"], text) if values.get("k") else 0
    l = _int(values["l"], text) if values.get("l") else 0
    if k < 0 or l < 0:
        raise FormatError(f"k and l must be nonnegative in {text!r}")
    return FormalCut.generic(k, l, parse_partition(values.get("gamma", "")))


def parse_generator_values(text: str) -> Dict[str, Tuple[int, ...]]:
    """'alpha=9;beta=7,4' -> {'alpha': (9,), 'beta': (7, 4)}."""
    return {key: parse_int_list(value) for key, value in _key_values(text, ";")}


def parse_scalar_values(text: str) -> Dict[str, Fraction]:
    """'t=5;a1=9;b1=1/2' -> generator values."""
    result: Dict[str, Fraction] = {}
    for key, value in _key_values(text, ";"):
        try:
            result[key] = Fraction(value)
        except (ValueError, ZeroDivisionError):
            raise FormatError(f"{value!r} for {key!r} is not a rational number")
    return result


def _blocks(values: Sequence[str], context: str) -> Tuple[Block, ...]:
    blocks = []
    for value in values:
        name, sep, seq = value.partition(":")
        if not sep:
            raise FormatError(f"block {value!r} in {context!r} must look like NAME:seq")
        try:
            blocks.append(Block(name.strip(), parse_int_list(seq)))
        except SlzError as e:
            raise FormatError(str(e))
    return tuple(blocks)


def parse_slz_family(text: str) -> FamilySpec:
    """'A=A1:1,0;B=B1:0;gamma=1;Abar=C1:0;Bbar=;gammabar=' into a FamilySpec; block keys repeat."""
    grouped: Dict[str, List[str]] = {"A": [], "B": [], "Abar": [], "Bbar": []}
    parts = {"gamma": Partition(), "gammabar": Partition()}
    for key, value in _key_values(text, ";"):
        if key in grouped:
            if value:
                grouped[key].append(value)
        elif key in parts:
            parts[key] = parse_partition(value)
        else:
            raise FormatError(f"unknown family key {key!r} in {text!r}; expected A, B, gamma, Abar, Bbar, gammabar")
    try:
        return FamilySpec(
            _blocks(grouped["A"], text),
            _blocks(grouped["B"], text),
            parts["gamma"],
            _blocks(grouped["Abar"], text),
            _blocks(grouped["Bbar"], text),
            parts["gammabar"],
        )
    except SlzError as e:
        raise FormatError(f"{text!r}: {str(e)}")


def parse_tuple_index(text: str) -> TupleIndex:
    """'alpha=1,0|0;delta=1' with '|' between the sequences of one group."""
    fields: Dict[str, object] = {}
    for key, value in _key_values(text, ";"):
        if key in ("alpha", "beta", "alphabar", "betabar"):
            fields[key] = tuple(parse_int_list(s) for s in value.split("|")) if value else ()
        elif key in ("delta", "deltabar"):
            fields[key] = parse_partition(value)
        else:
            raise FormatError(f"unknown tuple key {key!r} in {text!r}")
    return TupleIndex(**fields)


def parse_module_index(spec, text: str):
    """A basis index of spec: '5' for C^Z, '3,1,0' for wedges, '2,1' for Fock; ';' between tensor factors."""
    if isinstance(spec, TensorProduct):
        pieces = text.split(";")
        if len(pieces) != len(spec.factors):
            raise FormatError(f"{text!r} has {len(pieces)} components, {spec} has {len(spec.factors)} factors")
        return tuple(parse_module_index(f, p) for f, p in zip(spec.factors, pieces))
    if spec.kind == "cz":
        return _int(text, text)
    if spec.kind == "wedge":
        return parse_int_list(text)
    return parse_partition(text)


# serialization


def index_to_data(idx):
    if isinstance(idx, Partition):
        return str(idx)
    if isinstance(idx, TupleIndex):
        return idx.to_dict()
    if isinstance(idx, tuple):
        return [index_to_data(x) for x in idx]
    return idx


def vector_records(v: SparseVector) -> List[Dict[str, object]]:
    return [{"basis": index_to_data(idx), "coefficient": str(c)} for idx, c in v.items()]


@dataclass
class Result:
    """A command's payload plus an optional table of rows for csv and text output."""

    payload: Dict[str, object]
    rows: Optional[List[Dict[str, object]]] = None
    title: str = ""
    columns: List[str] = field(default_factory=list)

    def table_rows(self) -> Tuple[List[str], List[Dict[str, object]]]:
        if self.rows is not None:
            columns = self.columns or (list(self.rows[0]) if self.rows else [])
            return columns, self.rows
        flat = [{"key": k, "value": v} for k, v in sorted(self.payload.items())]
        return ["key", "value"], flat


def _cell(value) -> str:
    if isinstance(value, (dict, list)):
        return json.dumps(value, sort_keys=True)
    if value is None:
        return ""
    return str(value)


def render(result: Result, fmt: str) -> str:
    """
    Serialize a result deterministically.

    Args:
        result: Payload and rows of a command
        fmt: 'json', 'csv' or 'text'

    Returns:
        The complete output, newline terminated
    """
    if fmt == "json":
        return json.dumps(result.payload, indent=2, sort_keys=True, ensure_ascii=False) + "\n"
    columns, rows = result.table_rows()
    if fmt == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow([_cell(row.get(c)) for c in columns])
        return buffer.getvalue()
    if fmt == "text":
        table = Table(title=result.title or None, box=box.ASCII)
        for c in columns:
            table.add_column(c)
        for row in rows:
            table.add_row(*(_cell(row.get(c)) for c in columns))
        console = Console(file=io.StringIO(), width=120, color_system=None, force_terminal=False)
        console.print(table)
        return console.file.getvalue()
    raise FormatError(f"unknown output format {fmt!r}; use {', '.join(FORMATS)}")


def write_atomic(path: Path, text: str) -> None:
    """Write text to path through a temporary file in the same directory."""
    path = Path(path)
    directory = path.parent if str(path.parent) else Path(".")
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as handle:
            handle.write(text)
        os.replace(tmp, path)
    except OSError:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
