"""
Runtime settings for the toolkit.

Only operational knobs live here, namely logging and the DFT backend.
Analysis parameters such as periodicities are never read from the environment;
the CLI passes them to the library as arguments.

Each field maps to a ``PPS_``-prefixed variable (``PPS_LOG_LEVEL=DEBUG``). A
``.env`` file in the working directory is read as well, and a variable set in
the process environment wins over the same key in that file.
"""

from typing import Literal

from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """
    Ambient settings shared by the library and the command-line surface.
    """

    # Minimum level emitted by structlog (DEBUG, INFO, WARNING, ERROR)
    log_level: str = "WARNING"
    # Render log events as JSON lines instead of the console renderer
    log_json: bool = False
    # Default DFT evaluation strategy; "direct" is the O(N^2) reference sum
    dft_backend: Literal["fft", "direct"] = "fft"

    model_config = SettingsConfigDict(
        env_prefix="PPS_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )


settings = Settings()
