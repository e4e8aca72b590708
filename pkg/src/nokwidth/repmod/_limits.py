from __future__ import annotations

from dataclasses import dataclass, field

from nokwidth import config


@dataclass(frozen=True)
class BuildLimits:
    """Resource limits for complete module builds.

    - `max_dim` bounds dim V(lambda) for `build_module`; lazily filled
      modules used by the per-tuple checks are not subject to it.
    """

    max_dim: int = field(default_factory=lambda: config.MAX_DIM)

    def __post_init__(self) -> None:
        # Clamp rather than raise, a bad env value should not crash imports.
        if not isinstance(self.max_dim, int) or self.max_dim < 1:
            object.__setattr__(self, "max_dim", 1)
