from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """
    Loads runtime settings from the environment and the optional .env file.
    """
    # Logging
    LOG_LEVEL: str = "WARNING"

    # Desk-scale guards
    BRUTE_FORCE_MAX_VARS: int = 24
    GAMMA_CYCLE_MAX_EDGES: int = 10
    BETA_MAX_EDGES: int = 15
    FRONTIER_ENUM_LIMIT: int = 10000
    EXHAUSTIVE_SEARCH_MAX_EDGES: int = 6

    # Re-validate every compute_db result (enabled by the test suite)
    VERIFY_DECOMPOSITIONS: bool = False

    # Instance generator
    DEFAULT_SEED: int = 0

    model_config = SettingsConfigDict(env_file=".env", env_file_encoding="utf-8", extra="ignore")


settings = Settings()
