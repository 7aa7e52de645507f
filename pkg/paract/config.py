import os
from dataclasses import dataclass, fields, replace


@dataclass(frozen=True)
class Settings:
    """Tunable limits and defaults. Environment variables PARACT_<FIELD> override the defaults."""
    br_order_cap: int = 6
    suite_instances: int = 200
    max_group_order: int = 16
    max_space_size: int = 64
    json_indent: int = 2
    jobs: int = 1
    seed: int = 0

    @classmethod
    def from_env(cls, environ=None) -> 'Settings':
        environ = os.environ if environ is None else environ
        values = {}
        for f in fields(cls):
            raw = environ.get(f'PARACT_{f.name.upper()}')
            if raw is None:  continue
            try:
                values[f.name] = int(raw)
            except ValueError:
                raise ValueError(f'PARACT_{f.name.upper()} must be an integer, got {raw!r}')
        return cls(**values)

    def updated(self, **kwargs) -> 'Settings':
        """Copy with the given fields replaced; None values are ignored"""
        return replace(self, **{k: v for k, v in kwargs.items() if v is not None})


settings = Settings.from_env()
