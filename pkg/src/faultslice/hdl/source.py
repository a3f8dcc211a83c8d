"""Source text handling: byte-offset to line/column mapping and diagnostics."""

from __future__ import annotations

import bisect
from dataclasses import dataclass


@dataclass(frozen=True)
class Span:
    """Half-open source region, 1-based lines and columns."""

    line: int
    column: int
    end_line: int
    end_column: int

    def render(self) -> str:
        return f"{self.line}:{self.column}"


@dataclass(frozen=True)
class Diagnostic:
    message: str
    span: Span

    def render(self) -> str:
        return f"{self.span.render()}: {self.message}"


class SourceUnit:
    """Raw design text plus an offset -> (line, column) index."""

    def __init__(self, text: str, path: str = "<memory>"):
        self.path = path
        self.text = text
        # offsets of line starts; covers every offset 0..len(text)
        starts = [0]
        for i, ch in enumerate(text):
            if ch == "\n":
                starts.append(i + 1)
        self._line_starts = starts

    def position(self, offset: int) -> tuple[int, int]:
        """1-based (line, column) of a byte offset; offset may equal len(text)."""
        if offset < 0 or offset > len(self.text):
            raise ValueError(f"offset {offset} outside source of length {len(self.text)}")
        line = bisect.bisect_right(self._line_starts, offset) - 1
        return line + 1, offset - self._line_starts[line] + 1

    def span(self, start: int, end: int) -> Span:
        line, col = self.position(start)
        end_line, end_col = self.position(end)
        return Span(line, col, end_line, end_col)

    def slice(self, span: Span) -> str:
        """Text covered by a span (used by use/def audit tooling)."""
        start = self._line_starts[span.line - 1] + span.column - 1
        end = self._line_starts[span.end_line - 1] + span.end_column - 1
        return self.text[start:end]
