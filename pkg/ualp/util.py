import json
import math
import sys
from datetime import datetime
from typing import Any, TextIO

from colorama import Fore, Style


def _paint(text: str, color: str, stream: TextIO) -> str:
    isatty = getattr(stream, "isatty", None)
    if isatty is not None and isatty():
        return f"{color}{text}{Style.RESET_ALL}"
    return text


def debug_print(debug: bool, *args: Any) -> None:
    if not debug:
        return
    timestamp = datetime.now().strftime("%Y-%m-%d %H:%M:%S")
    message = " ".join(map(str, args))
    stream = sys.stderr
    print(f"{_paint('[' + timestamp + ']', Fore.LIGHTBLACK_EX, stream)} {message}", file=stream)


def print_status(ok: bool, message: str) -> None:
    """Print a pass/fail line to standard error in green or red."""
    stream = sys.stderr
    print(_paint(message, Fore.GREEN if ok else Fore.RED, stream), file=stream)


def print_banner(message: str) -> None:
    stream = sys.stderr
    print(_paint(message, Fore.CYAN, stream), file=stream)


def format_number(value: float) -> str:
    """17 significant digits: round-trips every double exactly."""
    if isinstance(value, bool):
        raise TypeError("booleans are not numbers here")
    if isinstance(value, int):
        return str(value)
    value = float(value)
    if not math.isfinite(value):
        raise ValueError(f"cannot serialize non-finite number {value!r}")
    return format(value, ".17g")


def to_json_text(obj: Any, indent: int = 2) -> str:
    """Serialize plain data with every float written by `format_number`.

    Keys keep insertion order, so identical inputs give identical bytes.
    """
    return _encode(obj, indent, 0) + "\n"


def _encode(obj: Any, indent: int, depth: int) -> str:
    if obj is None:
        return "null"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, (int, float)):
        return format_number(obj)
    if isinstance(obj, str):
        return json.dumps(obj, ensure_ascii=False)
    pad = " " * (indent * (depth + 1))
    closing = " " * (indent * depth)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(str(key))}: {_encode(value, indent, depth + 1)}" for key, value in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + closing + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        items = [f"{pad}{_encode(value, indent, depth + 1)}" for value in obj]
        return "[\n" + ",\n".join(items) + "\n" + closing + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")
