"""Text format for point configurations.

Lines starting with '#' are comments and blank lines are ignored.  An
optional first directive selects the field: `field rational` (default) or
`field fp <p>`.  Every other line is one point as three whitespace-separated
integers, reduced to canonical form on load.  Duplicate points (after
reduction) are a load error.
"""

from __future__ import annotations

from .errors import DegenerateInput, UnsupportedField
from .fields import Field, PrimeField, QQ
from .incidence import PointConfig
from .projective import ProjPoint


class ConfigParseError(ValueError):
    """Malformed configuration file; carries 1-based line and column."""

    def __init__(self, lineno: int, column: int, message: str):
        super().__init__(f"line {lineno}, column {column}: {message}")
        self.lineno = lineno
        self.column = column


def _tokens_with_columns(line: str) -> list[tuple[str, int]]:
    out = []
    col = 0
    for tok in line.split():
        col = line.index(tok, col)
        out.append((tok, col + 1))
        col += len(tok)
    return out


def loads(text: str) -> PointConfig:
    """Parse a configuration file into a PointConfig."""
    field: Field = QQ
    field_set = False
    points: list[ProjPoint] = []
    seen: set[tuple[int, int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        toks = _tokens_with_columns(raw)
        if toks[0][0] == "field":
            if points or field_set:
                raise ConfigParseError(
                    lineno, toks[0][1], "field directive must come first, once"
                )
            spec = [t for t, _ in toks[1:]]
            if spec == ["rational"]:
                field = QQ
            elif len(spec) == 2 and spec[0] == "fp":
                try:
                    p = int(spec[1])
                except ValueError:
                    raise ConfigParseError(lineno, toks[2][1], f"bad prime {spec[1]!r}")
                try:
                    field = PrimeField(p)
                except UnsupportedField as exc:
                    raise ConfigParseError(lineno, toks[2][1], str(exc))
            else:
                raise ConfigParseError(
                    lineno, toks[0][1], "expected 'field rational' or 'field fp <p>'"
                )
            field_set = True
            continue
        if len(toks) != 3:
            raise ConfigParseError(
                lineno, toks[0][1], f"expected 3 coordinates, got {len(toks)}"
            )
        coords = []
        for tok, col in toks:
            try:
                coords.append(int(tok))
            except ValueError:
                raise ConfigParseError(lineno, col, f"not an integer: {tok!r}")
        try:
            pt = ProjPoint.make(*coords, field=field)
        except DegenerateInput:
            raise ConfigParseError(lineno, toks[0][1], "zero vector is not a point")
        if pt.coords in seen:
            raise ConfigParseError(lineno, toks[0][1], f"duplicate point {pt}")
        seen.add(pt.coords)
        points.append(pt)
    if not points:
        raise ConfigParseError(1, 1, "no points in file")
    return PointConfig.from_points(points)


def dumps(cfg: PointConfig) -> str:
    """Serialize a PointConfig; loads(dumps(cfg)) == cfg."""
    lines = [f"field {cfg.field.label}"]
    lines += ["{} {} {}".format(*p.coords) for p in cfg.points]
    return "\n".join(lines) + "\n"
