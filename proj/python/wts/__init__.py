"""Well-tempered scoring games: evaluation, comparison and classification."""

from ._wts import (  # noqa: F401
    Game,
    Partizan,
    Workspace,
    WtsError,
    count_classes,
    octet,
)

__all__ = ["Game", "Partizan", "Workspace", "WtsError", "count_classes", "octet"]
