from functools import lru_cache
from pathlib import Path
from typing import Literal

from pydantic import Field, computed_field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Toolkit settings with environment-based configuration.

    Only solver caps and logging live here. Seeds are never read from the
    environment: they come from command-line flags or run configs.
    """

    model_config = SettingsConfigDict(
        env_prefix="BDCSP_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    # === Logging ===
    LOG_LEVEL: Literal["DEBUG", "INFO", "WARNING", "ERROR"] = Field(default="INFO")
    LOG_DIR: Path | None = Field(default=None, description="Directory for file sinks, off when unset")

    # === Exact solvers ===
    EXACT_IS_CAP: int = Field(default=40, description="Max vertices for exact independent set")
    BRUTE_FORCE_CAP: int = Field(default=2_000_000, description="Max assignments enumerated")
    POLYTOPE_EXHAUSTIVE_CAP: int = Field(default=20, description="Max vertices for subset enumeration")

    # === Dictatorship gadgets ===
    DICT_EXACT_CAP: int = Field(default=2_000_000, description="Max (tR)^L for exact acceptance")
    EFRON_STEIN_CAP: int = Field(default=1_000_000, description="Max R^L table entries")
    GADGET_C_ACCEPT: float = Field(default=2.5, description="Accept H when lambda2 <= c/sqrt(t)")
    GADGET_MAX_RETRIES: int = Field(default=100)

    # === Spectral ===
    SPECTRAL_DENSE_LIMIT: int = Field(default=200, description="Dense eigensolve up to this size")

    # === Sweeps ===
    SWEEP_WORKERS: int = Field(default=4, ge=1)

    # === Computed Properties ===
    @computed_field
    @property
    def caps(self) -> dict[str, int]:
        """Effective enumeration caps, embedded in reports."""
        return {
            "exact_is": self.EXACT_IS_CAP,
            "brute_force": self.BRUTE_FORCE_CAP,
            "polytope_exhaustive": self.POLYTOPE_EXHAUSTIVE_CAP,
            "dict_exact": self.DICT_EXACT_CAP,
            "efron_stein": self.EFRON_STEIN_CAP,
        }


# === Paths ===
BASE_DIR = Path(__file__).parent.parent.resolve()
SRC_DIR = BASE_DIR / "src"


@lru_cache
def get_settings() -> Settings:
    """Get cached settings instance."""
    return Settings()


# Global settings instance
settings = get_settings()
