"""Shared helpers for the JSON text encodings of structures.

Decoders take a ``path`` (``$[2][0]`` style) so that validation errors point
at the offending position of the payload.
"""
from __future__ import annotations

from ..core import sorted_labels


class EncodingError(ValueError):
    pass


def is_label(x) -> bool:
    return (isinstance(x, str) and x != "") or (isinstance(x, int) and not isinstance(x, bool))


def decode_list(obj, path="$") -> list:
    if not isinstance(obj, list):
        raise EncodingError(f"{path}: expected an array, got {type(obj).__name__}")
    return obj


def check_labels(items, path="$") -> None:
    for i, x in enumerate(items):
        if not is_label(x):
            raise EncodingError(f"{path}[{i}]: {x!r} is not a label (string or integer)")
    kinds = {type(x) for x in items}
    if len(kinds) > 1:
        raise EncodingError(f"{path}: labels mix strings and integers")


def decode_block(obj, path="$", allow_empty=False) -> tuple:
    items = decode_list(obj, path)
    check_labels(items, path)
    if len(set(items)) != len(items):
        raise EncodingError(f"{path}: repeated label in block")
    if not items and not allow_empty:
        raise EncodingError(f"{path}: blocks must be nonempty")
    return sorted_labels(items)


def label_text(labels) -> str:
    labels = [str(a) for a in labels]
    if all(len(a) == 1 for a in labels):
        return "".join(labels)
    return " ".join(labels)


def block_text(block) -> str:
    return "{" + ",".join(str(a) for a in block) + "}" if block else "∅"
