"""Configuration management for the application."""

from pydantic import field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Run settings, taken from defaults and explicit overrides only."""

    model_config = SettingsConfigDict(case_sensitive=False, extra="forbid")

    # Oracle settings
    oracle_state_cap: int = 256  # refuse exhaustive work when q**n exceeds this

    # Lift settings
    lift_start: int = 0
    lift_beta: int = 1
    retry_lift_starts: bool = True  # tower stages may try other start symbols

    @field_validator("oracle_state_cap")
    @classmethod
    def check_cap(cls, v: int) -> int:
        """The cap must allow at least one state."""
        if v < 1:
            raise ValueError("oracle_state_cap must be positive")
        return v

    @field_validator("lift_start")
    @classmethod
    def check_start(cls, v: int) -> int:
        if v < 0:
            raise ValueError("lift_start must be a non-negative symbol")
        return v

    @classmethod
    def settings_customise_sources(
        cls,
        settings_cls,
        init_settings,
        env_settings,
        dotenv_settings,
        file_secret_settings,
    ):
        # No environment or .env lookup: runs are reproducible from their flags.
        return (init_settings,)


def load_settings(**overrides) -> Settings:
    """Load and return settings, with keyword overrides (e.g. from CLI flags)."""
    return Settings(**{k: v for k, v in overrides.items() if v is not None})
