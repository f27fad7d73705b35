"""Reading and writing cycles as JSON or plain text."""
from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from ..graphs import automorphism_from_json, graph_from_params
from ..verify import HamCycle

JSON_SAFE = 2**53


def json_number(x):
    """Integers beyond the exact double range are emitted as strings."""
    if isinstance(x, int) and abs(x) > JSON_SAFE:
        return str(x)
    return x


def cycle_to_dict(c: HamCycle) -> dict:
    return {
        "family": c.graph.family,
        "params": c.graph.params(),
        "construction": c.construction,
        "construction_params": c.params,
        "claimed_k": c.claimed_k,
        "automorphism": c.automorphism.to_json() if c.automorphism is not None else None,
        "words": c.words.tolist(),
    }


def cycle_from_dict(d: dict) -> HamCycle:
    try:
        g = graph_from_params(d["family"], d["params"])
        words = d["words"]
    except KeyError as exc:
        raise ValueError(f"missing field {exc}") from None
    f = d.get("automorphism")
    f = automorphism_from_json(f, g) if f else None
    c = HamCycle.from_words(g, [tuple(w) for w in words], construction=d.get("construction", ""),
                            params=d.get("construction_params") or {})
    c.automorphism = f
    c.claimed_k = d.get("claimed_k")
    return c


def dumps_text(c: HamCycle) -> str:
    d = cycle_to_dict(c)
    lines = []
    for key in ("family", "params", "construction", "construction_params", "claimed_k", "automorphism"):
        lines.append(f"# {key}: {json.dumps(d[key])}")
    wide = c.graph.alphabet > 10
    for w in c.words.tolist():
        lines.append(" ".join(map(str, w)) if wide else "".join(map(str, w)))
    return "\n".join(lines) + "\n"


def loads_text(text: str) -> HamCycle:
    meta = {}
    words = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            key, _, val = line[1:].partition(":")
            try:
                meta[key.strip()] = json.loads(val.strip())
            except json.JSONDecodeError as exc:
                raise ValueError(f"bad header line {raw!r}: {exc}") from None
            continue
        parts = line.split()
        if len(parts) == 1:
            parts = list(parts[0])
        try:
            words.append([int(x) for x in parts])
        except ValueError:
            raise ValueError(f"bad word line {raw!r}") from None
    meta["words"] = words
    return cycle_from_dict(meta)


def write_cycle(c: HamCycle, path, fmt: str = "json") -> None:
    path = Path(path)
    if fmt == "json":
        path.write_text(json.dumps(cycle_to_dict(c)) + "\n")
    elif fmt == "text":
        path.write_text(dumps_text(c))
    else:
        raise ValueError(f"unknown format {fmt!r}")


def read_cycle(path) -> HamCycle:
    text = Path(path).read_text()
    if text.lstrip().startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ValueError(f"malformed JSON: {exc}") from None
        return cycle_from_dict(data)
    return loads_text(text)


def words_array(c: HamCycle) -> np.ndarray:
    return np.asarray(c.words)
