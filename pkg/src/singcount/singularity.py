"""The singularity types A1 (node), A2 (cusp) and A3 (tacnode)."""

from __future__ import annotations

import enum


class SingClass(enum.Enum):
    A1 = 1
    A2 = 2
    A3 = 3

    @property
    def codim(self) -> int:
        """Number of conditions imposed on the linear system; equals k for A_k."""
        return self.value

    @classmethod
    def parse(cls, text) -> "SingClass":
        if isinstance(text, cls):
            return text
        try:
            return cls[str(text).strip().upper()]
        except KeyError:
            raise ValueError(f"unknown singularity {text!r}; expected A1, A2 or A3") from None

    def __str__(self) -> str:
        return self.name
