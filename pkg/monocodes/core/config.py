from typing import Literal

try:
    from dotenv import load_dotenv
    load_dotenv(dotenv_path=".env")
except Exception:
    pass

from pydantic import Field, PositiveFloat, PositiveInt, model_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Library and CLI settings loaded from environment variables."""

    # Runtime settings
    environment: Literal["development", "staging", "production"] = Field("development", description="Runtime environment")

    # Logging settings
    log_level: Literal["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"] = Field(
        "WARNING", description="Logging level"
    )
    log_file_path: str = Field("logs/monocodes.log", description="Path to log file")
    enable_file_logging: bool = Field(False, description="Enable file logging")

    # Monomial limits
    max_variables: PositiveInt = Field(30, description="Largest variable count m a monomial may carry")
    exhaustive_max_m: PositiveInt = Field(
        16, description="Largest m for closures, intervals and other downset enumerations"
    )

    # Matrix limits
    matrix_max_m: PositiveInt = Field(16, description="Largest m for evaluation vectors and generator matrices")
    dense_matrix_max_m: PositiveInt = Field(12, description="Largest m for the dense Kronecker construction")
    oracle_max_m: PositiveInt = Field(12, description="Largest m for nullspace and row-space cross-checks")
    enumeration_max_dim: PositiveInt = Field(24, description="Largest dimension for exhaustive codeword enumeration")

    # Orbit limits
    orbit_max_log2: PositiveInt = Field(24, description="Largest log2 orbit size enumerated explicitly")
    min_weight_enumerate_max: PositiveInt = Field(
        1 << 20, description="Largest number of minimum-weight codewords enumerated explicitly"
    )

    # Channel settings
    alphabet_cap: PositiveInt = Field(1 << 20, description="Largest output alphabet after merging")
    channel_pair_cap: PositiveInt = Field(
        1 << 24, description="Largest output alphabet produced by a single transform before merging"
    )
    probability_tolerance: PositiveFloat = Field(1e-12, description="Tolerance for channel normalisation checks")
    ranking_tolerance: PositiveFloat = Field(
        1e-9, description="Relative tolerance under which two Bhattacharyya values count as tied"
    )
    merge_tolerance: PositiveFloat = Field(
        1e-9, description="Relative tolerance for merging outputs with proportional likelihoods"
    )

    # Randomised procedures
    default_seed: int = Field(20160115, description="Seed used when --seed is not given")
    mc_chunk_size: PositiveInt = Field(65536, description="Monte-Carlo samples per independent substream")
    mc_max_workers: PositiveInt = Field(1, description="Worker threads for Monte-Carlo substreams")
    verify_lta_maps: PositiveInt = Field(50, description="Random LTA maps checked by verify")

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
        env_prefix="MONOCODES_"
    )

    @model_validator(mode="after")
    def _validate_caps(self) -> "Settings":
        if not self.matrix_max_m <= self.exhaustive_max_m <= self.max_variables:
            raise ValueError("Caps must satisfy matrix_max_m <= exhaustive_max_m <= max_variables")
        if self.dense_matrix_max_m > self.matrix_max_m:
            raise ValueError("dense_matrix_max_m cannot exceed matrix_max_m")
        if self.oracle_max_m > self.matrix_max_m:
            raise ValueError("oracle_max_m cannot exceed matrix_max_m")
        if self.channel_pair_cap < self.alphabet_cap:
            raise ValueError("channel_pair_cap cannot be smaller than alphabet_cap")
        return self

    @model_validator(mode="after")
    def _validate_tolerances(self) -> "Settings":
        for name in ("probability_tolerance", "merge_tolerance", "ranking_tolerance"):
            if getattr(self, name) >= 1:
                raise ValueError(f"{name} must lie in (0, 1)")
        return self


settings = Settings()  # type: ignore
